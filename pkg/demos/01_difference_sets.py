"""
Difference sets in group rings
==============================

"""

# a planar difference set in Z7: every nonzero residue is a difference exactly once
from dscayley import groupring as gr
from dscayley.algebra import cyclic_group
from dscayley.diffsets import (GdsDescriptor, GdsParams, check_type_equation, neofield_gds,
                               verify_gds)

Z7 = cyclic_group(7)
D = gr.from_subset(Z7, [1, 2, 4])
print("D D^(-1) =", gr.mul(D, gr.inv_image(D)).coeffs)

# the verifier counts differences twice over and reports what it measured
report = verify_gds(GdsDescriptor(Z7, (1, 2, 4), (), GdsParams(7, 3, 1)))
print("ok:", report.ok, "lambda:", report.measured_lambda)

# a perturbed set fails, with witnesses (element, count, expected)
bad = verify_gds(GdsDescriptor(Z7, (1, 2, 3), (), GdsParams(7, 3, 1)))
print("ok:", bad.ok, "witnesses:", bad.witnesses[:3])

# the neofield set in (F_q*)^2 has three exceptional subgroups and satisfies type V
desc = neofield_gds(7)
r = check_type_equation(desc, "V")
print("type V holds:", r.ok, "deficiency sizes:", r.deficiency_sizes())
