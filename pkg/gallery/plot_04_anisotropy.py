"""
No connected etale algebras in D_4
==================================

The local category D_4 is checked end to end: trivial-twist census,
dimension bounds, total positivity, norm integrality and a final ratio test.
"""

# %%
from wittsig.anisotropy import anisotropy_report

rep = anisotropy_report()
print(rep.to_text())

# %%
# The report is also available as JSON for downstream tools.
import json

doc = json.loads(rep.to_json())
print(doc["bounds"], doc["totally_positive"], doc["norm_integral"], doc["final_ratio"])
