"""GF(2) linear algebra on int-packed bit vectors."""

from __future__ import annotations


def first_dependency(rows: list[int]) -> set[int] | None:
    """Indices of the first prefix-minimal linear dependency among rows.

    Feeds rows into a basis one at a time, tracking which input rows were
    combined to produce each basis vector.  When a row reduces to zero the
    recorded combination is a dependency over the prefix seen so far; its
    index set is returned.  Returns None when the rows are independent.

    Zero rows are dependencies of size one.
    """
    basis: dict[int, tuple[int, int]] = {}
    for i, row in enumerate(rows):
        mask = 1 << i
        v = row
        while v:
            pivot = v & -v
            if pivot in basis:
                bv, bm = basis[pivot]
                v ^= bv
                mask ^= bm
            else:
                basis[pivot] = (v, mask)
                break
        else:
            return {j for j in range(i + 1) if (mask >> j) & 1}
    return None
