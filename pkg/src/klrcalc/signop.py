"""
The graded sign involution on the two-copy ambient algebra, Clifford
elements, parity projections, the Clifford-system axioms, and the
translation between the two-copy and one-quiver pictures.

The ambient algebra for a block is the tagged direct sum of the block over
the quiver and over its opposite, both indexed by the same residue
sequences.  The sign map swaps the tags and scales a monomial by
(-1)^(length + |exponents|); its fixed points are the alternating
subalgebra.  In this picture the tag swap is fixed-point free, so every
sign choice gives an honest Clifford element with square 1 -- including on
blocks whose sequences are fixed by the reversal map, where the one-quiver
difference of idempotents would degenerate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import linalg
from .algebra import (TAG_MAIN, TAG_OPP, TAGS_BOTH, Element, KLR, Mono,
                      ShapeError, _acc1)
from .perms import length
from .quiver import Root, root_of_seq


class NotInvertibleError(ValueError):
    pass


class NonCentralEpsilonError(ValueError):
    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


def sgn(x: Element) -> Element:
    """The graded sign map: swap tags, negate y's and psi's.

    On a monomial this is (-1)^(l(w) + |a|) times the tag-swapped monomial.
    """
    ctx = x.ctx
    dom = ctx.dom
    out = {}
    for m, c in x.terms.items():
        other = TAG_OPP if m.tag == TAG_MAIN else TAG_MAIN
        if (length(m.w) + sum(m.a)) % 2:
            c = dom.neg(c)
        out[Mono(other, m.w, m.a, m.seq)] = c
    return Element(ctx, out)


def ambient_unit(ctx: KLR, root: Root) -> Element:
    return ctx.unit(ctx.block_seqs(root), TAGS_BOTH)


def class_idempotent(ctx: KLR, root: Root) -> Element:
    """e over the block class: the two-copy block identity, sign-fixed."""
    return ambient_unit(ctx, root)


def e_pair(ctx: KLR, seq) -> Element:
    """e[i] = e_G(i) + e_G'(i)."""
    return ctx.e(seq, TAG_MAIN) + ctx.e(seq, TAG_OPP)


def eps_pair(ctx: KLR, seq) -> Element:
    """e_G(i) - e_G'(i), the signed companion of e[i]."""
    return ctx.e(seq, TAG_MAIN) - ctx.e(seq, TAG_OPP)


@dataclass(frozen=True)
class CliffordChoice:
    """A sign per residue sequence of the block; +1 means the G-tagged
    idempotent is taken as the class representative."""

    signs: tuple  # ((seq, +-1), ...) in sequence order

    def sign(self, seq) -> int:
        for s, v in self.signs:
            if s == seq:
                return v
        raise KeyError(seq)

    @staticmethod
    def all_plus(ctx: KLR, root: Root) -> "CliffordChoice":
        return CliffordChoice(tuple((s, 1) for s in ctx.block_seqs(root)))

    @staticmethod
    def from_mapping(ctx: KLR, root: Root, mapping: Mapping) -> "CliffordChoice":
        seqs = ctx.block_seqs(root)
        missing = [s for s in seqs if s not in mapping]
        if missing:
            raise ShapeError(f"sign choice not total: missing {missing[0]!r}")
        return CliffordChoice(tuple((s, 1 if mapping[s] >= 0 else -1) for s in seqs))


def make_epsilon(ctx: KLR, root: Root, choice: CliffordChoice | None = None) -> Element:
    """The Clifford element of the block for the given sign choice:
    sum of sign(i) * (e_G(i) - e_G'(i)).  Always squares to the block
    identity and is negated by the sign map."""
    if choice is None:
        choice = CliffordChoice.all_plus(ctx, root)
    out = ctx.zero()
    for seq, sig in choice.signs:
        out = out + eps_pair(ctx, seq).scale(sig)
    return out


def block_generators(ctx: KLR, root: Root):
    """Named generators of the ambient block: all idempotents, y's, psi's."""
    seqs = ctx.block_seqs(root)
    gens = []
    for tag in TAGS_BOTH:
        for s in seqs:
            gens.append((f"e({','.join(map(str, s))})@{tag}", ctx.e(s, tag)))
    for r in range(1, ctx.n + 1):
        gens.append((f"y[{r}]", ctx.y_element(r, seqs, TAGS_BOTH)))
    for r in range(1, ctx.n):
        gens.append((f"psi[{r}]", ctx.psi_element(r, seqs, TAGS_BOTH)))
    return gens


def centrality_check(ctx: KLR, x: Element, root: Root):
    """Does x commute with every generator of the ambient block?

    Returns (True, None) or (False, witness generator name).
    """
    for name, g in block_generators(ctx, root):
        if x * g != g * x:
            return False, name
    return True, None


def parity_project(ctx: KLR, x: Element, parity: str) -> Element:
    """Even part (x + sgn x)/2 or odd part (x - sgn x)/2."""
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', not {parity!r}")
    s = sgn(x)
    total = x + s if parity == "even" else x - s
    return total.scale(ctx.dom.half)


def sgn_eigenvalue(x: Element):
    """+1, -1, 0 for the zero element, or None for a non-eigenvector."""
    if x.is_zero():
        return 0
    s = sgn(x)
    if s == x:
        return 1
    if s == -x:
        return -1
    return None


# --- translation to the one-quiver picture ---------------------------------


def translate_to_single(ctx: KLR, x: Element) -> Element:
    """Identify the opposite-tagged copy with the reversed block of the
    quiver itself: e_G'(i) goes to e_G(tau i), y and psi stay put."""
    if ctx.tau is None:
        raise ShapeError("context has no reversal map")
    out: dict = {}
    for m, c in x.terms.items():
        if m.tag != TAG_MAIN:
            m = Mono(TAG_MAIN, m.w, m.a, ctx.tau.seq(m.seq))
        _acc1(out, m, c, ctx.dom)
    return Element(ctx, out)


def translate_to_ambient(ctx: KLR, x: Element, root: Root) -> Element:
    """Inverse of translate_to_single on the class of `root`.

    Only defined when root != tau(root): otherwise the two tagged copies
    land on the same block and the identification is not invertible.
    """
    if ctx.tau is None:
        raise ShapeError("context has no reversal map")
    tau_root = ctx.tau.root(root)
    if tau_root == root:
        raise NotInvertibleError(
            "block is reversal-symmetric; the one-quiver picture is not invertible")
    out = {}
    for m, c in x.terms.items():
        if m.tag != TAG_MAIN:
            raise ShapeError("one-quiver element expected (G-tagged terms only)")
        content = root_of_seq(ctx.quiver, m.seq)
        if content == root:
            out[m] = c
        elif content == tau_root:
            out[Mono(TAG_OPP, m.w, m.a, ctx.tau.seq(m.seq))] = c
        else:
            raise ShapeError(f"term outside the class of {root}: {m}")
    return ctx.elem(out)


# --- Clifford axiom checking ------------------------------------------------


def truncated_ambient_monos(ctx: KLR, root: Root, bound: int):
    monos, _ = ctx.enumerate_basis(root, bound, tags=TAGS_BOTH)
    return monos

def clifford_axioms_check(ctx: KLR, root: Root, choice: CliffordChoice | None = None,
                          bound: int = 1, seed: int = 0, max_pairs: int = 400):
    """Check the graded Clifford-system axioms on the truncated block.

    Axioms, in report order: centrality of epsilon (a precondition -- the
    check refuses to continue without it), epsilon^2 = 1, sgn(eps) = -eps,
    product parity (even*even and odd*odd land even, even*odd lands odd; all
    pairs up to `max_pairs` per combination, deterministically sampled),
    odd part = eps * even part as truncated spans, direct sum (rank
    additivity), the identity lands even, and the even rank is half the
    ambient rank.

    Returns (ok, axioms, meta): `axioms` maps axiom name to a dict with
    "status" and "witness" keys.
    """
    import random

    dom = ctx.dom
    axioms: dict = {}
    meta = {"bound": bound, "seed": seed}
    eps = make_epsilon(ctx, root, choice)
    central, witness = centrality_check(ctx, eps, root)
    axioms["centrality"] = {"status": "pass" if central else "fail", "witness": witness}
    if not central:
        return False, axioms, meta

    one = ambient_unit(ctx, root)
    axioms["epsilon_square"] = {
        "status": "pass" if eps * eps == one else "fail", "witness": None}
    axioms["sgn_negates_epsilon"] = {
        "status": "pass" if sgn(eps) == -eps else "fail", "witness": None}

    monos = truncated_ambient_monos(ctx, root, bound)
    basis_elems = [Element(ctx, {m: dom.one}) for m in monos]
    even = [parity_project(ctx, b, "even") for b in basis_elems]
    odd = [parity_project(ctx, b, "odd") for b in basis_elems]
    even = [e for e in even if not e.is_zero()]
    odd = [o for o in odd if not o.is_zero()]

    rng = random.Random(seed)
    def sample_pairs(xs, ys):
        allp = [(i, j) for i in range(len(xs)) for j in range(len(ys))]
        if len(allp) > max_pairs:
            allp = rng.sample(allp, max_pairs)
        return [(xs[i], ys[j]) for i, j in sorted(allp)]

    bad = None
    checked = 0
    for pa, pb, want in (("even", "even", 1), ("even", "odd", -1),
                         ("odd", "odd", 1)):
        xs = even if pa == "even" else odd
        ys = even if pb == "even" else odd
        for u, v in sample_pairs(xs, ys):
            z = u * v
            checked += 1
            if sgn_eigenvalue(z) not in (0, want):
                bad = f"{pa}*{pb} product is not a {want:+d} eigenvector"
                break
        if bad:
            break
    meta["pairs_checked"] = checked
    axioms["product_parity"] = {"status": "fail" if bad else "pass", "witness": bad}

    eps_even = [eps * b for b in even]
    rows_odd = [o.terms for o in odd]
    rows_eps_even = [z.terms for z in eps_even]
    ok_span = linalg.spans_equal(rows_odd, rows_eps_even, dom)
    axioms["odd_is_eps_even"] = {"status": "pass" if ok_span else "fail", "witness": None}

    r_even = linalg.rank([e.terms for e in even], dom)
    r_odd = linalg.rank(rows_odd, dom)
    r_all = linalg.rank([e.terms for e in even] + rows_odd, dom)
    ambient_rank = linalg.rank([{m: dom.one} for m in monos], dom)
    ok_sum = (r_even + r_odd == r_all == ambient_rank)
    axioms["direct_sum"] = {
        "status": "pass" if ok_sum else "fail",
        "witness": None if ok_sum else f"ranks {r_even}+{r_odd} vs {r_all} vs {ambient_rank}"}

    axioms["unit_in_even"] = {
        "status": "pass" if sgn(one) == one else "fail", "witness": None}

    ok_half = 2 * r_even == ambient_rank
    axioms["rank_halving"] = {
        "status": "pass" if ok_half else "fail",
        "witness": None if ok_half else f"even rank {r_even}, ambient {ambient_rank}"}

    ok = all(v["status"] == "pass" for v in axioms.values())
    return ok, axioms, meta
