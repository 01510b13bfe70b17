"""How large can a clique in the square of a 2-degenerate graph get?

The tight family reaches floor(5D/2) for every D >= 8. Random 2-degenerate
graphs of similar size stay far below that.
"""

from squareclique import build_tight, degeneracy, max_clique, random_2degenerate, square

print(" D   n    max deg  degeneracy  omega(square)  floor(5D/2)")
for d in (8, 9, 10, 11, 12, 16):
    inst = build_tight(d)
    g = inst.graph
    res = max_clique(square(g))
    print(f"{d:2}  {len(g):4}  {g.max_degree():7}  {degeneracy(g):10}  {res.size:13}  {5 * d // 2:11}")

# The witness found by the search is exactly the union of the gadget blocks.
inst = build_tight(10)
print("\nwitness equals the gadget blocks:", max_clique(square(inst.graph)).members == inst.clique_witness)

# Random graphs: the ratio omega/D is far from 5/2.
ratios = []
for seed in range(50):
    g = random_2degenerate(60, 2, seed)
    ratios.append(max_clique(square(g)).size / g.max_degree())
print(f"random n=60: omega/D ranges over [{min(ratios):.2f}, {max(ratios):.2f}]")
