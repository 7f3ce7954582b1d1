"""
Searching for covering configurations
=====================================

"""

from dscayley.covering import (check_cover, construction1_config, format_search_table,
                               search_cover, tau_bound, tau_exhaustive)

# the printed Z5 x Z5 values leave ten elements uncovered
print(check_cover(construction1_config(literal=True)))

# moving a_1 to (2, 0) covers H with s = 8, score 25/64
c = construction1_config()
print(check_cover(c), c.s, c.score)

# every abelian group up to order 25, three Lambda sets, |Psi| = 1, |Lambda_i| <= 2
results = search_cover(25)
print(format_search_table(results[:8]))

# the counting ratio never reaches 4/9 once s >= 4
for s in (3, 4, 8, 16):
    print(s, tau_exhaustive(s), float(tau_bound(s)))
