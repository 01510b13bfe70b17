"""Token passing on a small example, with every vertex in S.

A deleted vertex of S hands one primary token to each later neighbour; a
vertex holding p primary tokens also relays p secondary tokens to each later
neighbour. Compare the relay rule p >= 1 with p >= 2.
"""

from squareclique import Graph, VertexOrder, classify, run_token_pass

g = Graph(range(1, 8), [(1, 2), (1, 7), (2, 4), (2, 5), (3, 4), (3, 6), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7)])
s = set(range(1, 8))
order = VertexOrder(range(1, 8))

for relay in (1, 2):
    led = run_token_pass(g, s, order, secondary_threshold=relay)
    print(f"relay when holding >= {relay} primary tokens")
    print("  vertex  later nbrs  primary  secondary  total")
    for v in order:
        print(f"  {v:6}  {str(order.later_neighbors(g, v)):10}  {led.primary[v]:7}  {led.secondary[v]:9}  {led.tokens(v):5}")
    print(f"  sum {led.total()} (cap 6|S| = {6 * len(s)})\n")

led = run_token_pass(g, s, order)
for d in (20, 100):
    cls = classify(led, g, s, order, d)
    print(f"d={d}: threshold {cls.threshold}, basic {sorted(cls.basic)}, big {sorted(cls.big)}")
