"""Run every finite case check and print the Markdown report.

Run: python3 demos/verify_report.py [jobs]
"""
import sys

from chevh1.paperchecks import VerifyConfig, run_all

jobs = int(sys.argv[1]) if len(sys.argv) > 1 else 1
report = run_all(VerifyConfig(), jobs=jobs)
print(report.to_markdown())
print("overall:", "pass" if report.passed else "FAIL")
