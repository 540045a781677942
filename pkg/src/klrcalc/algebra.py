"""
The quiver Hecke algebra engine: normal-form monomials, exact elements, and
a terminating rewrite system implementing the defining relations.

A monomial is psi_w * y^a * e(seq) on a tagged copy of the quiver: tag "G"
is the quiver itself, tag "G'" its opposite (same vertex labels, arrows
reversed).  psi_w multiplies the psi generators along the lex-least reduced
word of w, fixed once and for all; these monomials form a free basis and
every product rewrites back onto them.

Rewriting orientation: psi letters move left, y letters move right.

* y past psi uses the two dot-slide relations; the delta correction drops
  one psi and one y, so recursions shrink.
* a word that is not reduced gets its shortest bad prefix straightened until
  the repeated letter is adjacent, then the psi^2 relation fires; the psi
  count drops by two (or the term dies).
* a reduced but non-canonical word walks an elementary move path to the
  canonical word; every long braid move emits a correction three letters
  shorter, with the sign and the edge condition read off the residue
  sequence visible at that position.

Every recursive call strictly reduces the psi letter count, except the move
walks themselves, which are finite precomputed paths, so the rewrite
terminates.  Uniqueness of the resulting expansion is a theorem about the
algebra, not the code; the test suite checks it by confluence fuzzing.
"""

from __future__ import annotations

from typing import NamedTuple

from . import perms
from .perms import act, canonical_word, word_perm
from .quiver import Quiver, Root, all_seqs, sequences
from .scalars import Rationals

TAG_MAIN = "G"
TAG_OPP = "G'"
TAGS_BOTH = (TAG_MAIN, TAG_OPP)


class ShapeError(ValueError):
    pass


class BadGeneratorError(ValueError):
    pass


class NotHomogeneousError(ValueError):
    pass


class Mono(NamedTuple):
    """One basis monomial psi_w y^a e(seq) on the tagged quiver copy."""

    tag: str
    w: tuple
    a: tuple
    seq: tuple


class Element:
    """A finite linear combination of normal-form monomials.

    Immutable by convention: all operations build fresh elements.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: "KLR", terms: dict):
        self.ctx = ctx
        self.terms = terms

    def __add__(self, other):
        self.ctx._check_same(other.ctx)
        dom = self.ctx.dom
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc1(out, m, c, dom)
        return Element(self.ctx, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        dom = self.ctx.dom
        return Element(self.ctx, {m: dom.neg(c) for m, c in self.terms.items()})

    def scale(self, c):
        dom = self.ctx.dom
        if isinstance(c, int):
            c = dom.from_int(c)
        if dom.is_zero(c):
            return self.ctx.zero()
        return Element(self.ctx, {m: dom.mul(c, v) for m, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        return self.ctx.multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.ctx.key == other.ctx.key and self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return set(self.terms)

    def sorted_items(self):
        key = self.ctx.mono_sort_key
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]))

    def degree(self):
        """Z-degree of a homogeneous element (None for zero)."""
        degs = {self.ctx.mono_degree(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise NotHomogeneousError(f"mixed degrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({self.ctx.mono_degree(m) for m in self.terms}) <= 1

    def __repr__(self):
        from .exprs import element_to_text
        return element_to_text(self)


def _acc1(out: dict, m: Mono, c, dom) -> None:
    cur = out.get(m)
    if cur is None:
        if not dom.is_zero(c):
            out[m] = c
        return
    s = dom.add(cur, c)
    if dom.is_zero(s):
        del out[m]
    else:
        out[m] = s


def _acc(out: dict, src: dict, scale, dom) -> None:
    if dom.is_zero(scale):
        return
    for m, c in src.items():
        _acc1(out, m, dom.mul(scale, c), dom)


class KLR:
    """Context for exact computation in R_n of a quiver (and its opposite).

    Holds the quiver, the strand count n, the coefficient domain, an optional
    validated reversal map, and all rewrite memo tables.  Elements are tied
    to their context; contexts with equal (quiver, n, domain) are compatible.
    """

    def __init__(self, quiver: Quiver, n: int, domain=None, tau=None):
        if n < 0:
            raise ShapeError("n must be nonnegative")
        self.quiver = quiver
        self.opp = quiver.opposite()
        self.n = n
        self.dom = domain if domain is not None else Rationals()
        self.tau = tau
        self.key = (quiver, n, self.dom)
        self._zero_a = (0,) * n
        self._id_perm = perms.identity(n)
        self._psi_cache: dict = {}
        self._y_cache: dict = {}
        self._word_cache: dict = {}
        self._pair_cache: dict = {}
        self._psi_deg_cache: dict = {}
        # memo tables stop growing past this many entries apiece; results are
        # still computed, just not retained, so memory stays bounded under
        # adversarial workloads
        self.cache_limit = 300_000

    # --- basic constructors -----------------------------------------------

    def _check_same(self, other_ctx: "KLR") -> None:
        if self.key != other_ctx.key:
            raise ShapeError("elements live in different algebra contexts")

    def _check_seq(self, seq) -> tuple:
        seq = tuple(seq)
        if len(seq) != self.n:
            raise ShapeError(f"sequence length {len(seq)} != n = {self.n}")
        for v in seq:
            if v not in self.quiver._index:
                raise ShapeError(f"unknown vertex {v!r} in sequence")
        return seq

    def mono(self, w, a, seq, tag: str = TAG_MAIN) -> Mono:
        if tag not in TAGS_BOTH:
            raise ShapeError(f"unknown tag {tag!r}")
        if len(w) != self.n or len(a) != self.n:
            raise ShapeError("permutation/exponent length mismatch")
        return Mono(tag, tuple(w), tuple(a), self._check_seq(seq))

    def zero(self) -> Element:
        return Element(self, {})

    def elem(self, terms: dict) -> Element:
        dom = self.dom
        return Element(self, {m: c for m, c in terms.items() if not dom.is_zero(c)})

    def e(self, seq, tag: str = TAG_MAIN) -> Element:
        m = Mono(tag, self._id_perm, self._zero_a, self._check_seq(seq))
        return Element(self, {m: self.dom.one})

    def unit(self, seqs=None, tags=(TAG_MAIN,)) -> Element:
        """Sum of idempotents over `seqs` (default: all of I^n) and `tags`."""
        if seqs is None:
            seqs = all_seqs(self.quiver, self.n)
        terms = {}
        for tag in tags:
            for s in seqs:
                terms[Mono(tag, self._id_perm, self._zero_a, tuple(s))] = self.dom.one
        return Element(self, terms)

    def y_element(self, r: int, seqs=None, tags=(TAG_MAIN,)) -> Element:
        self._check_y_index(r)
        if seqs is None:
            seqs = all_seqs(self.quiver, self.n)
        a = tuple(1 if k == r - 1 else 0 for k in range(self.n))
        terms = {Mono(tag, self._id_perm, a, tuple(s)): self.dom.one
                 for tag in tags for s in seqs}
        return Element(self, terms)

    def psi_element(self, r: int, seqs=None, tags=(TAG_MAIN,)) -> Element:
        self._check_psi_index(r)
        if seqs is None:
            seqs = all_seqs(self.quiver, self.n)
        w = perms.right_mul_s(self._id_perm, r)
        terms = {Mono(tag, w, self._zero_a, tuple(s)): self.dom.one
                 for tag in tags for s in seqs}
        return Element(self, terms)

    def block_seqs(self, root: Root) -> tuple:
        return sequences(self.quiver, root)

    def block_idempotent(self, root: Root, tags=(TAG_MAIN,)) -> Element:
        """Sum of e(i) over I^beta: a central idempotent."""
        return self.unit(self.block_seqs(root), tags)

    # --- structure of monomials --------------------------------------------

    def _check_y_index(self, r: int) -> None:
        if not 1 <= r <= self.n:
            raise BadGeneratorError(f"y index {r} out of range 1..{self.n}")

    def _check_psi_index(self, r: int) -> None:
        if not 1 <= r <= self.n - 1:
            raise BadGeneratorError(f"psi index {r} out of range 1..{self.n - 1}")

    def arrow(self, tag: str, u, v) -> bool:
        """Is u -> v an arrow on the tagged copy?"""
        if tag == TAG_MAIN:
            return self.quiver.has_edge(u, v)
        return self.quiver.has_edge(v, u)

    def mono_face(self, m: Mono) -> tuple:
        """The residue sequence visible on the left of the monomial: w . seq."""
        return act(m.w, m.seq)

    def mono_degree(self, m: Mono) -> int:
        return 2 * sum(m.a) + self._psi_degree(m.w, m.seq)

    def _psi_degree(self, w: tuple, seq: tuple) -> int:
        key = (w, seq)
        cached = self._psi_deg_cache.get(key)
        if cached is not None:
            return cached
        total = 0
        face = list(seq)
        for c in reversed(canonical_word(w)):
            total -= self.quiver.cartan_entry(face[c - 1], face[c])
            face[c - 1], face[c] = face[c], face[c - 1]
        self._psi_deg_cache[key] = total
        return total

    def mono_sort_key(self, m: Mono):
        word = canonical_word(m.w)
        return (m.tag, len(word), word, m.a, self.quiver.seq_key(m.seq))

    # --- generator action ---------------------------------------------------

    def gen_left(self, gen, x: Element) -> Element:
        """Left multiplication by one generator token.

        Tokens: ("e", seq) or ("e", seq, tag), ("y", r), ("psi", r).
        """
        kind = gen[0]
        if kind == "e":
            seq = self._check_seq(gen[1])
            tag = gen[2] if len(gen) > 2 else TAG_MAIN
            return Element(self, self._apply_e(tag, seq, x.terms))
        if kind == "y":
            self._check_y_index(gen[1])
            return Element(self, self._apply_y(gen[1], x.terms))
        if kind == "psi":
            self._check_psi_index(gen[1])
            return Element(self, self._apply_psi(gen[1], x.terms))
        raise BadGeneratorError(f"unknown generator token {gen!r}")

    def _apply_e(self, tag: str, seq: tuple, terms: dict) -> dict:
        return {m: c for m, c in terms.items()
                if m.tag == tag and self.mono_face(m) == seq}

    def _apply_y(self, s: int, terms: dict) -> dict:
        dom = self.dom
        out: dict = {}
        for m, c in terms.items():
            _acc(out, self._y_mono(s, m), c, dom)
        return out

    def _apply_psi(self, r: int, terms: dict) -> dict:
        dom = self.dom
        out: dict = {}
        for m, c in terms.items():
            _acc(out, self._psi_mono(r, m), c, dom)
        return out

    # --- the rewrite core ----------------------------------------------------

    def _y_mono(self, s: int, m: Mono) -> dict:
        key = (s, m)
        cached = self._y_cache.get(key)
        if cached is not None:
            return cached
        dom = self.dom
        word = canonical_word(m.w)
        final_s, corrections = self._y_through(s, word, m.seq)
        a = list(m.a)
        a[final_s - 1] += 1
        out = {Mono(m.tag, m.w, tuple(a), m.seq): dom.one}
        for word2, sign in corrections:
            _acc(out, self._word_nf(word2, m.a, m.seq, m.tag), dom.from_int(sign), dom)
        if len(self._y_cache) < self.cache_limit:
            self._y_cache[key] = out
        return out

    def _y_through(self, s: int, word: tuple, seq: tuple):
        """Push y_s from the left of psi_word e(seq) to the right.

        Returns the final y index and the delta-corrections, each a word with
        one letter dropped and a sign.
        """
        corrections = []
        cur = s
        for t, c in enumerate(word):
            if cur == c or cur == c + 1:
                face = act(word_perm(word[t + 1:], self.n), seq)
                same = face[c - 1] == face[c]
                if cur == c:
                    # y_c psi_c e(j) = psi_c y_{c+1} e(j) - delta e(j)
                    if same:
                        corrections.append((word[:t] + word[t + 1:], -1))
                    cur = c + 1
                else:
                    # y_{c+1} psi_c e(j) = psi_c y_c e(j) + delta e(j)
                    if same:
                        corrections.append((word[:t] + word[t + 1:], +1))
                    cur = c
        return cur, corrections

    def _psi_mono(self, c: int, m: Mono) -> dict:
        key = (c, m)
        cached = self._psi_cache.get(key)
        if cached is not None:
            return cached
        word = (c,) + canonical_word(m.w)
        out = self._word_nf(word, m.a, m.seq, m.tag)
        if len(self._psi_cache) < self.cache_limit:
            self._psi_cache[key] = out
        return out

    def _word_nf(self, word: tuple, a: tuple, seq: tuple, tag: str) -> dict:
        """Normal form of psi_word y^a e(seq) for an arbitrary psi word."""
        key = (word, a, seq, tag)
        cached = self._word_cache.get(key)
        if cached is not None:
            return cached
        out = self._word_nf_uncached(word, a, seq, tag)
        if len(self._word_cache) < self.cache_limit:
            self._word_cache[key] = out
        return out

    def _word_nf_uncached(self, word: tuple, a: tuple, seq: tuple, tag: str) -> dict:
        dom = self.dom
        n = self.n
        if not word:
            return {Mono(tag, self._id_perm, a, seq): dom.one}
        v = word_perm(word, n)
        if perms.length(v) == len(word):
            cw = canonical_word(v)
            if word == cw:
                return {Mono(tag, v, a, seq): dom.one}
            out: dict = {}
            self._walk_moves(list(word), perms.move_path(word, cw, n), a, seq, tag, out)
            _acc1(out, Mono(tag, v, a, seq), dom.one, dom)
            return out
        # shortest non-reduced prefix: word[:k] drops length at letter k-1
        k = self._first_drop(word)
        prefix, c, rest = word[:k - 1], word[k - 1], word[k:]
        p = word_perm(prefix, n)
        target = canonical_word(perms.right_mul_s(p, c)) + (c,)
        out = {}
        cur = list(word)
        self._walk_moves(cur, perms.move_path(prefix, target, n), a, seq, tag, out)
        # cur is now Q + (c, c) + rest; fire the psi^2 relation at the face
        q_word = tuple(cur[:k - 2])
        rest = tuple(cur[k:])
        face = act(word_perm(rest, n), seq)
        jr, js = face[c - 1], face[c]
        if jr == js:
            pass  # psi_c^2 e = 0
        elif self.arrow(tag, jr, js):
            _acc(out, self._insert_y(q_word, c, rest, a, seq, tag), dom.one, dom)
            _acc(out, self._insert_y(q_word, c + 1, rest, a, seq, tag),
                 dom.from_int(-1), dom)
        elif self.arrow(tag, js, jr):
            _acc(out, self._insert_y(q_word, c + 1, rest, a, seq, tag), dom.one, dom)
            _acc(out, self._insert_y(q_word, c, rest, a, seq, tag),
                 dom.from_int(-1), dom)
        else:
            _acc(out, self._word_nf(q_word + rest, a, seq, tag), dom.one, dom)
        return out

    def _first_drop(self, word: tuple) -> int:
        """Smallest k with word[:k] not reduced."""
        p = list(range(self.n))
        for k, c in enumerate(word, start=1):
            # right descent test before the swap: does s_c shorten p?
            if p[c - 1] > p[c]:
                return k
            p[c - 1], p[c] = p[c], p[c - 1]
        raise ValueError("word is reduced")

    def _walk_moves(self, cur: list, moves, a: tuple, seq: tuple, tag: str,
                    out: dict) -> None:
        """Apply elementary moves in place, accumulating braid corrections.

        After a braid move at position t the element picks up a correction
        term with those three letters deleted; its sign depends on the move
        direction and the edge between the residues at the face.
        """
        dom = self.dom
        n = self.n
        for kind, t in moves:
            if kind == "comm":
                cur[t], cur[t + 1] = cur[t + 1], cur[t]
                continue
            p, q = cur[t], cur[t + 1]
            r = min(p, q)
            face = act(word_perm(tuple(cur[t + 3:]), n), seq)
            jr, jm, jt = face[r - 1], face[r], face[r + 1]
            sign = 0
            if jr == jt:
                if self.arrow(tag, jr, jm):
                    sign = -1
                elif self.arrow(tag, jm, jr):
                    sign = 1
            if p > q:
                sign = -sign
            if sign:
                deleted = tuple(cur[:t] + cur[t + 3:])
                _acc(out, self._word_nf(deleted, a, seq, tag),
                     dom.from_int(sign), dom)
            cur[t], cur[t + 1], cur[t + 2] = q, p, q

    def _insert_y(self, prefix: tuple, s: int, rest: tuple, a: tuple,
                  seq: tuple, tag: str) -> dict:
        """Normal form of psi_prefix y_s psi_rest y^a e(seq)."""
        dom = self.dom
        final_s, corrections = self._y_through(s, rest, seq)
        a2 = list(a)
        a2[final_s - 1] += 1
        out = dict(self._word_nf(prefix + rest, tuple(a2), seq, tag))
        for rest2, sign in corrections:
            _acc(out, self._word_nf(prefix + rest2, a, seq, tag),
                 dom.from_int(sign), dom)
        return out

    # --- products ------------------------------------------------------------

    def _mono_pair(self, m1: Mono, m2: Mono) -> dict:
        key = (m1, m2)
        cached = self._pair_cache.get(key)
        if cached is not None:
            return cached
        if m1.tag != m2.tag or m1.seq != self.mono_face(m2):
            out: dict = {}
        else:
            out = {m2: self.dom.one}
            for pos in range(self.n):
                for _ in range(m1.a[pos]):
                    out = self._apply_y(pos + 1, out)
            for c in reversed(canonical_word(m1.w)):
                out = self._apply_psi(c, out)
        if len(self._pair_cache) < self.cache_limit:
            self._pair_cache[key] = out
        return out

    def multiply(self, x: Element, y: Element) -> Element:
        self._check_same(x.ctx)
        self._check_same(y.ctx)
        dom = self.dom
        out: dict = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                _acc(out, self._mono_pair(m1, m2), dom.mul(c1, c2), dom)
        return Element(self, out)

    def word_element(self, tokens, seq, tag: str = TAG_MAIN) -> Element:
        """Right-fold evaluation of a generator word onto e(seq)."""
        x = self.e(seq, tag)
        for gen in reversed(list(tokens)):
            x = self.gen_left(gen, x)
        return x

    # --- basis enumeration ----------------------------------------------------

    def exponents_upto(self, bound: int) -> tuple:
        """All a in N^n with |a| <= bound, lexicographic."""
        def rec(k, left):
            if k == self.n:
                yield ()
                return
            for v in range(left + 1):
                for tail in rec(k + 1, left - v):
                    yield (v,) + tail
        return tuple(rec(0, bound))

    def enumerate_basis(self, root: Root, bound: int, tags=(TAG_MAIN,)):
        """All basis monomials over I^beta with |a| <= bound, plus the graded
        dimension table of the truncation.  Order: the canonical
        (tag, word, exponents, sequence) sort."""
        if bound < 0:
            raise ShapeError("bound must be >= 0")
        if root.height != self.n:
            raise ShapeError(f"root height {root.height} != n = {self.n}")
        monos = [Mono(tag, w, a, s)
                 for tag in tags
                 for w in perms.all_perms(self.n)
                 for a in self.exponents_upto(bound)
                 for s in self.block_seqs(root)]
        monos.sort(key=self.mono_sort_key)
        table: dict = {}
        for m in monos:
            d = self.mono_degree(m)
            table[d] = table.get(d, 0) + 1
        return monos, dict(sorted(table.items()))
