r"""
Command line and acceptance report
----------------------------------
Everything above is also reachable from the ``ringspectra`` command, which
writes CSV or JSON with 17 significant digits.
"""
import json
import subprocess
import sys

#%%
# A single circle, as CSV on stdout.
cmd = [sys.executable, "-m", "ringspectra", "spectrum-single", "--gamma", "7", "--R", "1"]
print(subprocess.run(cmd, capture_output=True, text=True, check=True).stdout)

#%%
# The asymptotic coefficients for a pair of circles, as JSON.
cmd = [sys.executable, "-m", "ringspectra", "coefficients", "--alpha", "1", "--beta", "3", "--R", "1", "--format", "json"]
doc = json.loads(subprocess.run(cmd, capture_output=True, text=True, check=True).stdout)
for row in doc["rows"]:
    print(row)

#%%
# A quick subset of the acceptance report. The exit status is 0 only when
# every selected criterion passes.
cmd = [sys.executable, "-m", "ringspectra", "verify", "--criteria", "A4,A5,A9"]
proc = subprocess.run(cmd, capture_output=True, text=True)
for row in json.loads(proc.stdout)["rows"]:
    print(row["id"], row["status"])
print("exit status:", proc.returncode)
