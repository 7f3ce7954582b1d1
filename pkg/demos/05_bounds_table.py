"""
Upper bounds against certified orders
=====================================

"""

from dscayley.bounds import format_table, table
from dscayley.constructions import best_for_degree
from dscayley.graph import certify_spec

# best construction for each degree, padded to exactly that degree
degrees = range(6, 31)
certs = [certify_spec(best_for_degree(d)) for d in degrees]
print(format_table(table(degrees, certs)))
