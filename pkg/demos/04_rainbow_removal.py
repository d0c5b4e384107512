"""How many vertices must go before a graph admits a J-colouring."""

import time

from rainbow_ren import families as fam
from rainbow_ren.ren import ren_exact, ren_upper_bound

for text in ["cycle:7", "wheel:5", "mycielskian:cycle:6", "join:cycle:5/cycle:5",
             "join:path:4/cycle:5", "corona:complete:4/complete:2", "corona:complete:2/cycle:5"]:
    g = fam.build(fam.parse_family(text))
    t0 = time.perf_counter()
    res = ren_exact(g)
    dt = time.perf_counter() - t0
    bound, _ = ren_upper_bound(g)
    print(f"{text:32s} ren={res.ren} removed={res.removed} greedy bound={bound} ({dt:.3f}s)")

# beyond the exact guard only the greedy bound is available
big = fam.cycle_graph(25)
print("\ncycle:25 greedy bound:", ren_upper_bound(big))
