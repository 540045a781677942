"""
Exact sparse linear algebra over a coefficient field.

Rows are dicts key -> scalar with hashable keys (monomials, in practice).
Gaussian elimination with arbitrary pivot keys; everything stays exact, so
rank results are certificates, not estimates.
"""

from __future__ import annotations


def _reduce_row(row: dict, pivots: dict, dom) -> dict:
    """Eliminate `row` against the current pivot rows (pivot col -> row).

    Pivot rows are normalized and never contain columns of earlier pivots,
    so each elimination replaces a pivot column by strictly later ones and
    the loop terminates.
    """
    row = dict(row)
    while True:
        hit = next((col for col in row if col in pivots), None)
        if hit is None:
            return row
        factor = row[hit]
        for k, v in pivots[hit].items():
            cur = row.get(k)
            val = dom.sub(cur, dom.mul(factor, v)) if cur is not None \
                else dom.neg(dom.mul(factor, v))
            if dom.is_zero(val):
                row.pop(k, None)
            else:
                row[k] = val


def rank(rows, dom) -> int:
    """Rank of the span of `rows` (dicts key -> scalar) over the field."""
    pivots: dict = {}
    r = 0
    for row in rows:
        red = _reduce_row(row, pivots, dom)
        if not red:
            continue
        col = min(red, key=repr)  # any deterministic pivot choice works
        inv = dom.inv(red[col])
        norm = {k: dom.mul(inv, v) for k, v in red.items()}
        pivots[col] = norm
        r += 1
    return r


def in_span(row, rows, dom) -> bool:
    base = rank(rows, dom)
    return rank(list(rows) + [row], dom) == base


def spans_equal(rows_a, rows_b, dom) -> bool:
    ra = rank(rows_a, dom)
    rb = rank(rows_b, dom)
    if ra != rb:
        return False
    return rank(list(rows_a) + list(rows_b), dom) == ra
