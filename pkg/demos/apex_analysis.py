"""
How far from planar are the family members?
===========================================

A graph is k-apex when deleting some k vertices leaves it planar.  The
members of both families resist two deletions, while every proper minor
of the exceptional members gives in.
"""

from spatialgraphs.catalog import family_member, fixture
from spatialgraphs.multigraph import complete_graph
from spatialgraphs.planarity import all_proper_minors_2apex, apex_witness, is_k_apex

for name, g in [
    ("K6", complete_graph(6)),
    ("K7", complete_graph(7)),
    ("P10", family_member("P10")),
    ("N9", fixture("N9")),
    ("N'10", fixture("N'10")),
]:
    ks = [k for k in (0, 1, 2, 3) if is_k_apex(g, k)]
    witness = apex_witness(g, ks[0]) if ks else None
    print(f"{name:5s} smallest working k = {ks[0]}  witness = {sorted(witness or ())}")

# the exceptional hosts are minor-minimal for this property: every proper
# minor is 2-apex even though the host itself is not
n9 = fixture("N9")
ok, failures = all_proper_minors_2apex(n9)
print()
print("N9 is 2-apex:", is_k_apex(n9, 2))
print("every proper minor of N9 is 2-apex:", ok, f"(failures: {failures})")
