"""
Verification suites: relation sweeps, seeded fuzzing, dimension tables, and
deterministic report emission.

Every suite is a pure function of its parameters and seed; reports render
byte-identically for identical inputs, so text output is golden-file safe.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from . import alternating, signop
from .algebra import TAG_MAIN, Element, KLR, Mono
from .quiver import (Quiver, Root, all_roots, all_seqs, default_reversal,
                     root_of_seq, root_tau_classes, validate_reversal)
from .scalars import Rationals


@dataclass
class Report:
    suite: str
    params: dict
    seed: int | None
    ok: bool
    payload: dict
    text_lines: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1


def emit_report(report, fmt: str = "text") -> str:
    """Render a Report (or a bare dict) deterministically."""
    if isinstance(report, dict):
        if not report:
            return "{}" if fmt == "json" else "all checks passed"
        if fmt == "json":
            return json.dumps(report, sort_keys=True, indent=2)
        return "\n".join(f"{k}: {v}" for k, v in sorted(report.items()))
    if fmt == "json":
        return json.dumps(report.payload, sort_keys=True, indent=2)
    return "\n".join(report.text_lines)


def make_context(quiver: Quiver, n: int, domain=None, tau_mapping=None) -> KLR:
    """Build a computation context, resolving the reversal map: an explicit
    mapping wins, else the family default if the quiver carries one."""
    if tau_mapping is not None:
        tau = validate_reversal(quiver, tau_mapping)
    else:
        tau = default_reversal(quiver)
    return KLR(quiver, n, domain, tau)


# --- seeded random elements ----------------------------------------------------


def random_mono(ctx: KLR, rng: random.Random, seqs, tags=(TAG_MAIN,),
                max_exp: int = 2) -> Mono:
    w = list(range(ctx.n))
    rng.shuffle(w)
    a = [0] * ctx.n
    for _ in range(rng.randint(0, max_exp)):
        a[rng.randrange(ctx.n)] += 1
    return Mono(rng.choice(tags), tuple(w), tuple(a), rng.choice(seqs))


def random_element(ctx: KLR, rng: random.Random, seqs=None, tags=(TAG_MAIN,),
                   max_terms: int = 3, max_exp: int = 2) -> Element:
    if seqs is None:
        seqs = all_seqs(ctx.quiver, ctx.n)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = rng.choice([-2, -1, 1, 2, 3])
        m = random_mono(ctx, rng, seqs, tags, max_exp)
        terms[m] = ctx.dom.add(terms.get(m, ctx.dom.from_int(0)), ctx.dom.from_int(c))
    return ctx.elem(terms)


# --- the relation sweep for the defining presentation ---------------------------


def _sweep_block(ctx: KLR, root: Root, bound: int):
    """Apply both sides of every defining relation to every truncated basis
    monomial of the block; returns aggregated rows."""
    rows = []
    seqs = ctx.block_seqs(root)
    n = ctx.n
    monos, _ = ctx.enumerate_basis(root, bound)
    elems = [Element(ctx, {m: ctx.dom.one}) for m in monos]
    unit = ctx.block_idempotent(root)

    def gen(kind, r, x):
        return ctx.gen_left((kind, r), x)

    def row(relation, pairs):
        checked = 0
        diff = None
        for lhs, rhs in pairs:
            checked += 1
            if lhs != rhs and diff is None:
                from .exprs import element_to_json_obj
                diff = element_to_json_obj(lhs - rhs)
        rows.append({"relation": relation, "block": str(root),
                     "checked": checked,
                     "status": "pass" if diff is None else "fail",
                     "diff": diff})

    # idempotent relations on the block
    row("e(i)e(j) = delta e(i)",
        ((ctx.e(i) * ctx.e(j), ctx.e(i) if i == j else ctx.zero())
         for i in seqs for j in seqs))
    row("sum_i e(i) acts as identity", ((unit * x, x) for x in elems))

    def face_of(m):
        return ctx.mono_face(m)

    # y_r e(i) = e(i) y_r   and   psi_r e(i) = e(s_r i) psi_r
    def pairs_ye():
        for m, x in zip(monos, elems):
            i = face_of(m)
            for r in range(1, n + 1):
                yx = gen("y", r, x)
                yield yx, ctx.gen_left(("e", i), yx)
    row("y_r e(i) = e(i) y_r", pairs_ye())

    def pairs_pe():
        for m, x in zip(monos, elems):
            i = face_of(m)
            for r in range(1, n):
                px = gen("psi", r, x)
                si = list(i)
                si[r - 1], si[r] = si[r], si[r - 1]
                yield px, ctx.gen_left(("e", tuple(si)), px)
    row("psi_r e(i) = e(s_r i) psi_r", pairs_pe())

    row("y_r y_s = y_s y_r",
        ((gen("y", r, gen("y", s, x)), gen("y", s, gen("y", r, x)))
         for x in elems for r in range(1, n + 1) for s in range(r + 1, n + 1)))

    def pairs_slide(first):
        for m, x in zip(monos, elems):
            i = face_of(m)
            for r in range(1, n):
                delta = i[r - 1] == i[r]
                if first:
                    lhs = gen("psi", r, gen("y", r + 1, x))
                    rhs = gen("y", r, gen("psi", r, x))
                else:
                    lhs = gen("y", r + 1, gen("psi", r, x))
                    rhs = gen("psi", r, gen("y", r, x))
                if delta:
                    rhs = rhs + x
                yield lhs, rhs
    row("psi_r y_{r+1} = (y_r psi_r + delta)", pairs_slide(True))
    row("y_{r+1} psi_r = (psi_r y_r + delta)", pairs_slide(False))

    row("psi_r y_s = y_s psi_r (s far)",
        ((gen("psi", r, gen("y", s, x)), gen("y", s, gen("psi", r, x)))
         for x in elems for r in range(1, n) for s in range(1, n + 1)
         if s not in (r, r + 1)))

    row("psi_r psi_s = psi_s psi_r (far)",
        ((gen("psi", r, gen("psi", s, x)), gen("psi", s, gen("psi", r, x)))
         for x in elems for r in range(1, n) for s in range(1, n)
         if abs(r - s) > 1))

    def pairs_sq():
        for m, x in zip(monos, elems):
            i = face_of(m)
            for r in range(1, n):
                u, v = i[r - 1], i[r]
                lhs = gen("psi", r, gen("psi", r, x))
                if u == v:
                    rhs = ctx.zero()
                elif ctx.arrow(m.tag, u, v):
                    rhs = gen("y", r, x) - gen("y", r + 1, x)
                elif ctx.arrow(m.tag, v, u):
                    rhs = gen("y", r + 1, x) - gen("y", r, x)
                else:
                    rhs = x
                yield lhs, rhs
    row("psi_r^2 cases", pairs_sq())

    def pairs_braid():
        for m, x in zip(monos, elems):
            i = face_of(m)
            for r in range(1, n - 1):
                lhs = gen("psi", r, gen("psi", r + 1, gen("psi", r, x)))
                rhs = gen("psi", r + 1, gen("psi", r, gen("psi", r + 1, x)))
                if i[r - 1] == i[r + 1]:
                    if ctx.arrow(m.tag, i[r - 1], i[r]):
                        rhs = rhs - x
                    elif ctx.arrow(m.tag, i[r], i[r - 1]):
                        rhs = rhs + x
                yield lhs, rhs
    row("deformed braid cases", pairs_braid())
    return rows


def run_klr_relations(quiver: Quiver, n: int, domain=None, bound: int = 2,
                      seed: int = 0, fuzz_triples: int = 100,
                      fuzz_words: int = 100, tau_mapping=None) -> Report:
    ctx = make_context(quiver, n, domain, tau_mapping)
    rows = []
    for root in all_roots(quiver, n):
        rows.extend(_sweep_block(ctx, root, bound))

    fuzz = {}
    checked, failure = associativity_fuzz(ctx, fuzz_triples, seed)
    fuzz["associativity"] = {"checked": checked,
                             "status": "pass" if failure is None else "fail",
                             "witness": failure}
    checked, failure = strategy_fuzz(ctx, fuzz_words, seed + 1)
    fuzz["rewrite_strategies"] = {"checked": checked,
                                  "status": "pass" if failure is None else "fail",
                                  "witness": failure}

    ok = all(r["status"] == "pass" for r in rows) and \
        all(v["status"] == "pass" for v in fuzz.values())
    params = {"quiver": quiver.name, "n": n, "bound": bound,
              "field": ctx.dom.name, "fuzz_triples": fuzz_triples,
              "fuzz_words": fuzz_words}
    payload = {"suite": "klr-relations", "params": params, "seed": seed,
               "instances": rows, "fuzz": fuzz}
    lines = _text_header("klr-relations", params, seed)
    lines += _text_rows(rows, key="relation")
    for name, res in fuzz.items():
        lines.append(f"{res['status'].upper()} {name} ({res['checked']} checks)")
    lines.append(_verdict(ok))
    return Report("klr-relations", params, seed, ok, payload, lines)


# --- fuzzing ---------------------------------------------------------------------


def associativity_fuzz(ctx: KLR, count: int, seed: int, tags=(TAG_MAIN,)):
    """(xy)z = x(yz) on random triples; returns (checked, first failure)."""
    rng = random.Random(seed)
    seqs = all_seqs(ctx.quiver, ctx.n)
    for k in range(count):
        x = random_element(ctx, rng, seqs, tags)
        y = random_element(ctx, rng, seqs, tags)
        z = random_element(ctx, rng, seqs, tags)
        if (x * y) * z != x * (y * z):
            return k + 1, f"triple #{k}"
    return count, None


def _tokens_element(ctx: KLR, tokens, block_seqs, rng) -> Element:
    """Evaluate a generator token word by random binary splitting.

    Generators are restricted to the block: left multiplication preserves
    blocks and the block idempotent is central, so the result against the
    block's idempotents is unchanged while intermediate products stay small.
    """
    if not tokens:
        return ctx.unit(block_seqs)
    if len(tokens) == 1:
        kind, r = tokens[0]
        if kind == "y":
            return ctx.y_element(r, block_seqs)
        return ctx.psi_element(r, block_seqs)
    k = rng.randint(1, len(tokens) - 1)
    left = _tokens_element(ctx, tokens[:k], block_seqs, rng)
    right = _tokens_element(ctx, tokens[k:], block_seqs, rng)
    return left * right


def strategy_fuzz(ctx: KLR, count: int, seed: int):
    """Two independently seeded rewrite orders agree on random words.

    Strategy A folds the word one generator at a time from the right;
    strategies B and C evaluate random binary split trees, multiplying the
    normalized halves.  All three must give the same normal form.
    """
    rng = random.Random(seed)
    rng_b = random.Random(seed + 101)
    rng_c = random.Random(seed + 202)
    seqs = all_seqs(ctx.quiver, ctx.n)
    for k in range(count):
        tokens = []
        for _ in range(rng.randint(0, 6)):
            if ctx.n >= 2 and rng.random() < 0.6:
                tokens.append(("psi", rng.randint(1, ctx.n - 1)))
            else:
                tokens.append(("y", rng.randint(1, ctx.n)))
        seq = rng.choice(seqs)
        block = ctx.block_seqs(root_of_seq(ctx.quiver, seq))
        a = ctx.word_element(tokens, seq)
        b = _tokens_element(ctx, tokens, block, rng_b) * ctx.e(seq)
        c = _tokens_element(ctx, tokens, block, rng_c) * ctx.e(seq)
        if not (a == b == c):
            return k + 1, f"word #{k}: {tokens} e({seq})"
    return count, None


def homogeneity_fuzz(ctx: KLR, count: int, seed: int, tags=(TAG_MAIN,)):
    """Products of homogeneous elements have additive degree; the sign map
    preserves degree.  Returns (checked, first failure)."""
    rng = random.Random(seed)
    seqs = all_seqs(ctx.quiver, ctx.n)
    for k in range(count):
        m1 = random_mono(ctx, rng, seqs, tags)
        m2 = random_mono(ctx, rng, seqs, tags)
        x = Element(ctx, {m1: ctx.dom.from_int(rng.choice([1, 2, -1]))})
        y = Element(ctx, {m2: ctx.dom.one})
        prod = x * y
        if not prod.is_zero():
            if prod.degree() != x.degree() + y.degree():
                return k + 1, f"product #{k}"
        if signop.sgn(x).degree() != x.degree():
            return k + 1, f"sgn degree #{k}"
    return count, None


# --- the remaining suites ---------------------------------------------------------


def _class_reps(ctx: KLR, n: int):
    return root_tau_classes(ctx.quiver, ctx.tau, n).reps


def run_alt_presentation(quiver: Quiver, n: int, domain=None, bound: int = 1,
                         seed: int = 0, tau_mapping=None,
                         with_express: bool = True) -> Report:
    ctx = make_context(quiver, n, domain, tau_mapping)
    if ctx.tau is None:
        raise ValueError("this suite needs a reversal map")
    instances = []
    notes = []
    for root in _class_reps(ctx, n):
        rows, block_notes = alternating.verify_alt_presentation(ctx, root)
        for r in rows:
            r["block"] = str(root)
        instances.extend(rows)
        for note in block_notes:
            if note not in notes:
                notes.append(note)
        if with_express:
            rows = alternating.express_coverage(ctx, root, bound)
            for r in rows:
                r["block"] = str(root)
            instances.extend(rows)
    ok = all(r["status"] == "pass" for r in instances)
    params = {"quiver": quiver.name, "n": n, "bound": bound, "field": ctx.dom.name}
    payload = {"suite": "alt-presentation",
               "theorem": "alternating presentation", "params": params,
               "seed": seed, "notes": notes, "instances": instances}
    lines = _text_header("alt-presentation", params, seed, notes)
    lines += _instance_lines(instances)
    lines.append(_verdict(ok))
    return Report("alt-presentation", params, seed, ok, payload, lines)


def run_signed_relations(quiver: Quiver, n: int, domain=None, bound: int = 1,
                         seed: int = 0, tau_mapping=None) -> Report:
    ctx = make_context(quiver, n, domain, tau_mapping)
    if ctx.tau is None:
        raise ValueError("this suite needs a reversal map")
    instances = []
    notes = []
    for root in _class_reps(ctx, n):
        rows, block_notes = alternating.verify_signed_relations(ctx, root, bound)
        for r in rows:
            r["block"] = str(root)
        instances.extend(rows)
        for note in block_notes:
            if note not in notes:
                notes.append(note)
    ok = all(r["status"] == "pass" for r in instances)
    params = {"quiver": quiver.name, "n": n, "bound": bound, "field": ctx.dom.name}
    payload = {"suite": "signed-relations", "theorem": "signed presentation",
               "params": params, "seed": seed, "notes": notes,
               "instances": instances}
    lines = _text_header("signed-relations", params, seed, notes)
    lines += _instance_lines(instances)
    lines.append(_verdict(ok))
    return Report("signed-relations", params, seed, ok, payload, lines)


def run_clifford(quiver: Quiver, n: int, domain=None, bound: int = 1,
                 seed: int = 0, max_pairs: int = 400, tau_mapping=None,
                 block: Root | None = None) -> Report:
    ctx = make_context(quiver, n, domain, tau_mapping)
    if ctx.tau is None:
        raise ValueError("this suite needs a reversal map")
    roots = [block] if block is not None else list(_class_reps(ctx, n))
    all_ok = True
    blocks = {}
    lines_body = []
    for root in roots:
        ok, axioms, meta = signop.clifford_axioms_check(
            ctx, root, None, bound=bound, seed=seed, max_pairs=max_pairs)
        all_ok = all_ok and ok
        blocks[str(root)] = axioms
        for name, res in sorted(axioms.items()):
            wit = f" ({res['witness']})" if res["witness"] else ""
            lines_body.append(f"{res['status'].upper()} [{root}] {name}{wit}")
    payload = blocks[str(roots[0])] if block is not None else blocks
    params = {"quiver": quiver.name, "n": n, "bound": bound,
              "field": ctx.dom.name, "max_pairs": max_pairs}
    lines = _text_header("clifford", params, seed) + lines_body
    lines.append(_verdict(all_ok))
    return Report("clifford", params, seed, all_ok, payload, lines)


def run_dims(quiver: Quiver, n: int, domain=None, bound: int = 3,
             seed: int = 0, tau_mapping=None) -> Report:
    ctx = make_context(quiver, n, domain, tau_mapping)
    if ctx.tau is None:
        raise ValueError("this suite needs a reversal map")
    full = alternating.full_dims_single(ctx, bound)
    alt = alternating.alternating_dims_single(ctx, bound)
    window = alternating.dims_complete_window(ctx, bound)
    halving = []
    k = 1
    while 2 * k + 2 <= window:
        lo, hi = 2 * k, 2 * k + 2
        a = alt.get(lo, 0) + alt.get(hi, 0)
        f = full.get(lo, 0) + full.get(hi, 0)
        halving.append({"k": k, "alternating": a, "full": f,
                        "status": "pass" if 2 * a == f else "fail"})
        k += 1
    ok = all(h["status"] == "pass" for h in halving)
    params = {"quiver": quiver.name, "n": n, "bound": bound, "field": ctx.dom.name}
    payload = {"suite": "dims", "params": params, "seed": seed,
               "full": {str(d): c for d, c in full.items()},
               "alternating": {str(d): c for d, c in alt.items()},
               "complete_upto_degree": window, "halving": halving}
    lines = _text_header("dims", params, seed)
    lines.append("degree table (full / alternating), complete up to degree "
                 f"{window}:")
    for d in sorted(set(full) | set(alt)):
        lines.append(f"  deg {d}: {full.get(d, 0)} / {alt.get(d, 0)}")
    for h in halving:
        lines.append(f"{h['status'].upper()} halving k={h['k']}: "
                     f"2*{h['alternating']} == {h['full']}")
    lines.append(_verdict(ok))
    return Report("dims", params, seed, ok, payload, lines)


SUITES = {
    "klr-relations": run_klr_relations,
    "alt-presentation": run_alt_presentation,
    "signed-relations": run_signed_relations,
    "clifford": run_clifford,
    "dims": run_dims,
}


# --- characteristic reduction spot check -------------------------------------------


def char_reduction_check(quiver: Quiver, n: int, root: Root, bound: int,
                         primes=(3, 5), sample: int = 60, seed: int = 0):
    """Structure constants over the rationals, reduced mod p, against the
    ones computed natively mod p.  Discrepancies are returned for reporting,
    not asserted; the engine never divides, so none are expected."""
    from .scalars import PrimeField
    rng = random.Random(seed)
    ctx_q = KLR(quiver, n, Rationals())
    monos, _ = ctx_q.enumerate_basis(root, bound)
    pairs = [(rng.choice(monos), rng.choice(monos)) for _ in range(sample)]
    mismatches = []
    for p in primes:
        fp = PrimeField(p)
        ctx_p = KLR(quiver, n, fp)
        for m1, m2 in pairs:
            prod_q = ctx_q._mono_pair(m1, m2)
            prod_p = ctx_p._mono_pair(m1, m2)
            reduced = {}
            for m, c in prod_q.items():
                v = fp.from_int(int(c))  # integral structure constants
                if not fp.is_zero(v):
                    reduced[m] = v
            if reduced != prod_p:
                mismatches.append((p, m1, m2))
    return len(pairs) * len(primes), mismatches


# --- text helpers -------------------------------------------------------------------


def _text_header(suite, params, seed, notes=()):
    lines = [f"suite: {suite}"]
    for k in sorted(params):
        lines.append(f"param {k} = {params[k]}")
    lines.append(f"seed: {seed}")
    for note in notes:
        lines.append(f"note: {note}")
    return lines


def _text_rows(rows, key):
    out = []
    for r in rows:
        out.append(f"{r['status'].upper()} [{r.get('block', '-')}] {r[key]} "
                   f"({r.get('checked', 1)} checks)")
    return out


def _instance_lines(instances):
    by_rel: dict = {}
    fails = []
    for inst in instances:
        name = (inst.get("block", "-"), inst["relation"])
        cur = by_rel.get(name, [0, 0])
        cur[0] += 1
        cur[1] += inst["status"] != "pass"
        by_rel[name] = cur
        if inst["status"] != "pass":
            fails.append(inst)
    out = []
    for (block, rel), (total, bad) in sorted(by_rel.items()):
        status = "FAIL" if bad else "PASS"
        out.append(f"{status} [{block}] {rel} ({total} instances, {bad} failing)")
    for inst in fails:
        out.append(f"  failing instance: {json.dumps(inst, sort_keys=True, default=str)}")
    return out


def _verdict(ok: bool) -> str:
    return "all checks passed" if ok else "FAILURES PRESENT"
