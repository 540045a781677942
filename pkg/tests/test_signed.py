"""The signed companion algebra: realized relations, structure maps, grading."""

import pytest

import klrcalc as K
from klrcalc import alternating as alt
from klrcalc import linalg, signop

TAGS = ("G", "G'")


@pytest.fixture(scope="module")
def ctx2():
    return K.make_context(K.cycle(3), 2)


@pytest.fixture(scope="module")
def root01(ctx2):
    return K.make_root(ctx2.quiver, {0: 1, 1: 1})


def test_eps_product_rule(ctx2, root01):
    i = (0, 1)
    ep = alt.signed_eps(ctx2, i, "+")
    em = alt.signed_eps(ctx2, i, "-")
    assert ep * ep == ep
    assert em * em == ep
    assert ep * em == em * ep == em
    j = (1, 0)
    assert alt.signed_eps(ctx2, j, "+") * ep == ctx2.zero()


def test_signed_generator_wrapper(ctx2, root01):
    g = alt.signed_generator(ctx2, ("eps", "-", (0, 1)), root01)
    assert g.elem == ctx2.e((0, 1)) - ctx2.e((0, 1), "G'")
    y = alt.signed_generator(ctx2, ("y", 1), root01)
    assert alt.deg2_of(ctx2, y.elem) == (2, "-")
    with pytest.raises(K.ShapeError):
        alt.signed_generator(ctx2, ("nope", 1), root01)


def test_eps_plus_sum_is_identity(ctx2, root01):
    total = ctx2.zero()
    for s in ctx2.block_seqs(root01):
        total = total + alt.signed_eps(ctx2, s, "+")
    assert total == signop.ambient_unit(ctx2, root01)


def test_psi_squared_on_minus(ctx2, root01):
    # edge 0 -> 1: (psi'_1)^2 eps_-(i) = (y'_1 - y'_2) eps_+(i)
    i = (0, 1)
    seqs = ctx2.block_seqs(root01)
    P = ctx2.psi_element(1, seqs, TAGS)
    Y1 = ctx2.y_element(1, seqs, TAGS)
    Y2 = ctx2.y_element(2, seqs, TAGS)
    lhs = P * (P * alt.signed_eps(ctx2, i, "-"))
    assert lhs == (Y1 - Y2) * alt.signed_eps(ctx2, i, "+")


def test_braid_correction_sign():
    # on i = (0,1,0) with the 0 -> 1 edge the correction is minus the signed
    # idempotent; the opposite sign (as misprinted) fails
    ctx = K.make_context(K.cycle(3), 3)
    root = K.make_root(ctx.quiver, {0: 2, 1: 1})
    i = (0, 1, 0)
    seqs = ctx.block_seqs(root)
    P1 = ctx.psi_element(1, seqs, TAGS)
    P2 = ctx.psi_element(2, seqs, TAGS)
    ep = alt.signed_eps(ctx, i, "+")
    em = alt.signed_eps(ctx, i, "-")
    lhs = P1 * (P2 * (P1 * ep))
    braided = P2 * (P1 * (P2 * ep))
    assert lhs == braided - em
    assert lhs != braided + em


def test_tau_twist_via_translation(ctx2, root01):
    tau = ctx2.tau
    for i in ctx2.block_seqs(root01):
        for a in ("+", "-"):
            two_copy = alt.signed_eps(ctx2, i, a)
            assert K.translate_to_single(ctx2, two_copy) == alt.theta_eps(ctx2, i, a)
            sign = 1 if a == "+" else -1
            assert alt.theta_eps(ctx2, i, a) == \
                alt.theta_eps(ctx2, tau.seq(i), a).scale(sign)


def test_eps_minus_vanishes_on_fixed_sequences(ctx2):
    # tau-fixed sequence in the one-quiver picture
    assert alt.theta_eps(ctx2, (0, 0), "-").is_zero()
    assert not alt.theta_eps(ctx2, (0, 0), "+").is_zero()


def test_deg2_table(ctx2, root01):
    seqs = ctx2.block_seqs(root01)
    i = (0, 1)
    assert alt.deg2_of(ctx2, alt.signed_eps(ctx2, i, "+")) == (0, "+")
    assert alt.deg2_of(ctx2, alt.signed_eps(ctx2, i, "-")) == (0, "-")
    assert alt.deg2_of(ctx2, ctx2.y_element(1, seqs, TAGS)) == (2, "-")
    P = ctx2.psi_element(1, seqs, TAGS)
    # cartan entry on the 0 -> 1 edge is -1
    assert alt.deg2_of(ctx2, P * alt.signed_eps(ctx2, i, "+")) == (1, "-")
    assert alt.deg2_of(ctx2, P * alt.signed_eps(ctx2, i, "-")) == (1, "+")


def test_deg2_errors(ctx2):
    mixed = ctx2.e((0, 1)) + ctx2.gen_left(("y", 1), ctx2.e((0, 1)))
    with pytest.raises(K.NotHomogeneousError):
        alt.deg2_of(ctx2, mixed)
    # homogeneous but not an eigenvector: e_G alone
    with pytest.raises(K.NotHomogeneousError):
        alt.deg2_of(ctx2, ctx2.e((0, 1)))


def test_full_signed_suite_passes(ctx2):
    for root in K.root_tau_classes(ctx2.quiver, ctx2.tau, 2).reps:
        rows, notes = alt.verify_signed_relations(ctx2, root, bound=1)
        bad = [r for r in rows if r["status"] != "pass"]
        assert not bad, bad[:3]
        assert any("braid correction" in n for n in notes)


def test_roundtrips_present_only_on_asymmetric_blocks(ctx2):
    sym = K.make_root(ctx2.quiver, {0: 2})
    rows, _ = alt.verify_signed_relations(ctx2, sym, bound=1)
    assert not [r for r in rows if "sigma(theta" in r["relation"]]
    asym = K.make_root(ctx2.quiver, {0: 1, 1: 1})
    rows, _ = alt.verify_signed_relations(ctx2, asym, bound=1)
    trips = [r for r in rows if "sigma(theta" in r["relation"]
             or "theta(sigma" in r["relation"]]
    assert trips and all(r["status"] == "pass" for r in trips)


def test_even_part_matches_alternating_span():
    for quiver in (K.cycle(3), K.path(3)):
        ctx = K.make_context(quiver, 2)
        for root in K.root_tau_classes(quiver, ctx.tau, 2).reps:
            monos = signop.truncated_ambient_monos(ctx, root, 2)
            even_rows = []
            for m in monos:
                from klrcalc.algebra import Element
                p = K.parity_project(ctx, Element(ctx, {m: ctx.dom.one}), "even")
                if not p.is_zero():
                    even_rows.append(p.terms)
            _, elems, _ = alt.alt_basis(ctx, root, 2)
            assert linalg.spans_equal(even_rows, [e.terms for e in elems], ctx.dom)
