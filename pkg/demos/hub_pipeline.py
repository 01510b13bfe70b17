"""Full pipeline on a six-hub gadget graph.

Every edge of K6 becomes a K_{2,3}; extra degree-2 vertices join inner
vertices with no common neighbour. The inner vertices form a clique of the
square, and the pipeline extracts a nice triple whose "later" side has
exactly six vertices, so the pair statistics and the counting identity are
all populated.
"""

from squareclique import build_hub_gadget
from squareclique.cli import run_pipeline

inst = build_hub_gadget(6, 3)
out = run_pipeline(inst.graph, inst.clique_witness, inst.d)

print(f"max degree {inst.d}, |S| = {len(inst.clique_witness)}, |S*| = {len(out['s_star'])}")
print("partition sizes:", out["partition_sizes"], " nice:", out["niceness"]["nice"])
print("H* multiplicities:", {f"{m['u']}-{m['v']}": m["mu"] for m in out["hstar"]["multiplicity"]})

print("\npair   d_ij  mu_ij  s_ij")
for row in out["pair_statistics"]["pairs"]:
    print(f"{row['i']}-{row['j']}    {row['d_ij']:4}  {row['mu_ij']:5}  {row['s_ij']:4}")

c = out["pair_statistics"]["counting"]
print(f"\nsum s_ij = {c['sum_s_ij']}, class-weighted count = {c['weighted_class_sum']}")
b = out["pair_statistics"]["outside_bound"]
print(f"sum s_ij <= 15d - 6|S*| - 30:  {b['lhs']} <= {b['rhs']}  ({b['holds']})")

violated = {k: v for k, v in out["diagnostics"]["summary"].items() if v["violations"]}
rows = sum(v["rows"] for v in out["diagnostics"]["summary"].values())
print(f"\n{rows} diagnostic rows; families with violations: {sorted(violated) or 'none'}")
print("J*:", out["jstar"])
