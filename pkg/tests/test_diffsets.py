import numpy as np
import pytest

from dscayley import groupring as gr
from dscayley.algebra import Subgroup, cyclic_group, direct_product
from dscayley.diffsets import (GdsDescriptor, GdsParams, check_type_equation,
                               difference_counts, dpds, lemma34_identity, neofield_gds,
                               odd_planar_rds, trivial_planar_rds, verify_gds)


def z7_descriptor(D):
    return GdsDescriptor(cyclic_group(7), D, (), GdsParams(7, 3, 1))


def test_planar_difference_set():
    r = verify_gds(z7_descriptor((1, 2, 4)))
    assert r.ok and r.measured_lambda == 1


def test_perturbed_set_rejected():
    # ordered differences of {1,2,3}: +-1 twice each, +-2 once each
    r = verify_gds(z7_descriptor((1, 2, 3)))
    assert not r.ok
    assert (1, 2, 1) in r.witnesses
    assert (6, 2, 1) in r.witnesses
    assert r.measured_lambda is None


def test_example_rds_in_z4():
    G = cyclic_group(4)
    desc = GdsDescriptor(G, (0, 1), (Subgroup(G, [0, 2]),), GdsParams.rds(2, 2, 2, 1))
    r = verify_gds(desc)
    assert r.ok and r.measured_lambda == 1 and r.measured_lambdas == [0]


def z4z4_descriptor():
    G = direct_product(cyclic_group(4), cyclic_group(4))
    D = (G.compose(1, 2), G.compose(2, 0), G.compose(0, 3))
    xs = np.arange(4)
    subs = (Subgroup(G, G.compose(xs, 0)), Subgroup(G, G.compose(0, xs)),
            Subgroup(G, G.compose(xs, xs)))
    return GdsDescriptor(G, D, subs, GdsParams(16, 3, 1, ((4, 0),) * 3))


def test_example_gds_three_subgroups():
    r = verify_gds(z4z4_descriptor())
    assert r.ok and r.measured_lambda == 1 and r.measured_lambdas == [0, 0, 0]


def test_wrong_claim_reported():
    desc = GdsDescriptor(cyclic_group(7), (1, 2, 4), (), GdsParams(7, 3, 2))
    r = verify_gds(desc)
    assert not r.ok and r.measured_lambda == 1


def test_descriptor_invariants():
    G = cyclic_group(4)
    with pytest.raises(ValueError):
        GdsDescriptor(G, (1, 1), (), GdsParams(4, 2, 1))
    N = Subgroup(G, [0, 2])
    with pytest.raises(ValueError):
        GdsDescriptor(G, (0, 1), (N, N), GdsParams(4, 2, 1, ((2, 0), (2, 0))))


def test_type_rank_mismatch():
    with pytest.raises(ValueError):
        check_type_equation(z7_descriptor((1, 2, 4)), "II")


def test_type_I():
    assert check_type_equation(z7_descriptor((1, 2, 4)), "I").ok


def test_type_III_affine():
    # {0,1,3} in Z8 with N = {0,4}: an (4,2,3,1)-RDS from the plane of order 3
    G = cyclic_group(8)
    desc = GdsDescriptor(G, (0, 1, 3), (Subgroup(G, [0, 4]),), GdsParams.rds(4, 2, 3, 1))
    r = check_type_equation(desc, "III")
    assert r.ok
    assert r.deficiencies["M"] == [2, 6]


def test_type_IV_dpds():
    desc = dpds(5)
    r = check_type_equation(desc, "IV")
    assert r.ok
    assert r.deficiencies["M_2"] == sorted(desc.subgroups[1].elements)


@pytest.mark.parametrize("q", [2, 3, 4, 7, 8, 9])
def test_dpds_family(q):
    assert check_type_equation(dpds(q), "IV").ok


def test_type_II_odd_planar():
    desc = odd_planar_rds(3)
    G = desc.group
    assert desc.subgroups[0].elements == tuple(sorted(G.compose(0, np.arange(3)).tolist()))
    assert check_type_equation(desc, "II").ok


@pytest.mark.parametrize("q", [5, 7, 9, 25, 27])
def test_odd_planar_family(q):
    assert check_type_equation(odd_planar_rds(q), "II").ok


def test_type_II_deficiency_is_empty():
    # D N = G for a type II set, so the deficiency is empty rather than n - 1
    desc = odd_planar_rds(5)
    D = desc.ring()
    N = desc.subgroup_ring(0)
    assert gr.mul(D, N) == gr.whole_group(desc.group)


def test_odd_planar_rejects_even():
    with pytest.raises(ValueError):
        odd_planar_rds(4)


def field_coords(desc):
    G = desc.group
    return sorted((int(a) + 1, int(b) + 1) for a, b in zip(*G.split(np.array(desc.D))))


def test_neofield_small():
    # GF(4) = {0, 1, w, w^2} with w = index 2 and w^2 = w + 1 = index 3
    assert field_coords(neofield_gds(4)) == [(2, 3), (3, 2)]
    assert field_coords(neofield_gds(3)) == [(2, 2)]
    with pytest.raises(ValueError):
        neofield_gds(2)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11, 16])
def test_neofield_type_V(q):
    desc = neofield_gds(q)
    r = check_type_equation(desc, "V")
    assert r.ok
    # for q = 3 the subgroups exhaust G - e, leaving lambda undetermined
    assert verify_gds(desc).measured_lambda == (None if q == 3 else 1)
    G = desc.group
    F = G.factors[0].field
    units = np.arange(1, q)
    anti = set(G.compose(units - 1, np.asarray(F.neg(units)) - 1).tolist())
    # D N_i = G - N_i for i = 1, 2 and D N_3 = G - {(x, -x)}
    assert r.deficiencies["M_1"] == sorted(desc.subgroups[0].elements)
    assert r.deficiencies["M_2"] == sorted(desc.subgroups[1].elements)
    assert r.deficiencies["M_3"] == sorted(anti)
    assert (set(anti) == set(desc.subgroups[2].elements)) == (q % 2 == 0)
    assert r.deficiency_sizes() == {"M_1": q - 1, "M_2": q - 1, "M_3": q - 1}


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_trivial_planar_rds(m):
    desc = trivial_planar_rds(m)
    q = 2**m
    assert desc.group.order == q * q and len(desc.D) == q
    assert verify_gds(desc).ok
    D = desc.ring()
    expected = q + gr.whole_group(desc.group) - desc.subgroup_ring(0)
    assert gr.mul(D, gr.inv_image(D)) == expected


def test_trivial_planar_m1():
    desc = trivial_planar_rds(1)
    G = desc.group
    assert desc.D == (G.pair(0, 0), G.pair(1, 0))
    # (1,0)(1,0) = (0,1), so (1,0) has order 4 and the group is Z4
    assert G.op(G.pair(1, 0), G.pair(1, 0)) == G.pair(0, 1)
    assert verify_gds(desc).ok


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_lemma34_identity_parity(m):
    holds, defect = lemma34_identity(m)
    assert holds == (m % 2 == 1)
    assert defect.is_zero() == holds
    assert defect.augmentation() == 0


def test_convolution_matches_pair_enumeration():
    for desc in (neofield_gds(9), dpds(7), trivial_planar_rds(3), odd_planar_rds(7)):
        D = desc.ring()
        conv = gr.mul(D, gr.inv_image(D)).coeffs.copy()
        conv[0] -= len(desc.D)
        assert np.array_equal(conv, difference_counts(desc.group, desc.D))


def test_report_text():
    text = verify_gds(z7_descriptor((1, 2, 3))).to_text()
    assert '"ok": false' in text and '"witnesses"' in text
