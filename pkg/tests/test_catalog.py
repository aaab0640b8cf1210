import numpy as np
import pytest

from tenfold import catalog, toeplitz
from tenfold.invariants import signature
from tenfold.symclass import add, check_membership

ALL = catalog.names()


def test_catalog_has_enough_entries():
    assert len(ALL) >= 24


@pytest.mark.parametrize("name", ALL)
def test_entry_membership_and_signature(name):
    ent = catalog.entry(name)
    got = catalog.generator_signature(name)
    assert tuple(got) == tuple(ent.expected)
    if not ent.exact:
        rep = catalog.generator(name)
        assert rep.ok
        assert all(v <= 1e-10 for v in rep.residuals.values()
                   if isinstance(v, float))


@pytest.mark.parametrize("name", [n for n in ALL
                                  if catalog.entry(n).torsion
                                  and not catalog.entry(n).exact])
def test_torsion_entries_have_order_two(name):
    ent = catalog.entry(name)
    rep = catalog.generator(name)
    dbl = add(rep.element, rep.element, ent.class_id, rep.algebra)
    rep2 = check_membership(dbl, ent.class_id, rep.algebra)
    assert rep2.ok
    assert signature(rep2).is_zero


def test_exact_torsion_doubling():
    w1 = catalog.generator("calkin_k1")
    z0 = toeplitz.zero(1)
    dbl = toeplitz.from_blocks([[w1, z0], [z0, w1]])
    assert toeplitz.exact_invariant(dbl, 1) == ("det_parity", 0)


def test_x0_matches_printed_entries():
    rep = catalog.generator("x0", 16)
    t = rep.element.base.points[:, 0]
    vals = rep.element.values
    assert np.allclose(vals[:, 0, 0], 1 - 2 * t)
    assert np.allclose(vals[:, 0, 3], 2 * np.sqrt(t - t * t))
    assert np.allclose(vals[:, 3, 3], 2 * t - 1)
    assert np.allclose(vals[:, 1, 1], 1.0)
    assert np.allclose(vals[:, 2, 2], -1.0)


def test_x2_is_frame_rotation_of_x0():
    from tenfold import matcore
    x0 = catalog.generator("x0", 16).element
    x2 = catalog.generator("x2", 16).element
    w = matcore.conjugator_w(2)
    assert np.allclose(x2.values, w @ x0.values @ w.conj().T)


def test_torus_bott_membership_is_exact():
    rep = catalog.torus_bott((16, 16))
    assert rep.ok
    assert rep.residuals["symmetry"] < 1e-14
    assert signature(rep).values() == (1,)


def test_torus_bott_constant_profile_is_trivial():
    from tenfold.basespace import FnElement, sample_space
    base = sample_space("torus2", (16, 16))
    vals = np.zeros((base.npoints, 2, 2), dtype=complex)
    vals[:, 0, 0] = 1.0
    vals[:, 1, 1] = -1.0
    rep = check_membership(FnElement(base, vals), 6)
    assert rep.ok and signature(rep).is_zero


def test_sphere3_entry_flagged_derived():
    assert "derived" in catalog.entry("sphere3_ko5").description


def test_unknown_name():
    with pytest.raises(KeyError):
        catalog.entry("nope")
