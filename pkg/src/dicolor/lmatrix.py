"""L-matrices of vertex-labeled digraphs.

Entry ``a[i, j]`` records whether ``i -> j`` is an arc and whether ``i`` and
``j`` share a label::

                 same label   different label
    arc               2              1
    no arc           -1              0

The diagonal is zero. A vertex always shares its own label, so when a
triple condition mentions ``a[i, i]`` the diagonal is read as "same label".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .digraph import Digraph, is_acyclic
from .errors import DigraphError, InvalidMatrixError

ENTRY_VALUES = (2, 1, 0, -1)
SAME = (2, -1)
DIFFERENT = (0, 1)


@dataclass(frozen=True)
class LabeledDigraph:
    digraph: Digraph
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.digraph.p:
            raise DigraphError(f"{len(self.labels)} labels for {self.digraph.p} vertices")

    @property
    def p(self) -> int:
        return self.digraph.p

    def label_classes(self) -> list[list[int]]:
        classes: dict[int, list[int]] = {}
        for v, lab in enumerate(self.labels):
            classes.setdefault(lab, []).append(v)
        return sorted(classes.values(), key=lambda c: c[0])


def canonical_labels(labels: Sequence[int]) -> tuple[int, ...]:
    """Relabel as class indices 1..k numbered by smallest member."""
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(lab, len(relabel) + 1) for lab in labels)


def as_lmatrix(M) -> np.ndarray:
    """Coerce to a square int8 array over {2, 1, 0, -1} with zero diagonal."""
    a = np.asarray(M)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidMatrixError(f"L-matrix must be square, got shape {a.shape}")
    if not np.all(np.isin(a, ENTRY_VALUES)):
        bad = np.argwhere(~np.isin(a, ENTRY_VALUES))[0]
        raise InvalidMatrixError(f"entry ({bad[0] + 1}, {bad[1] + 1}) = {a[tuple(bad)]} is not in {{2, 1, 0, -1}}")
    if np.any(np.diag(a) != 0):
        i = int(np.flatnonzero(np.diag(a))[0])
        raise InvalidMatrixError(f"diagonal entry ({i + 1}, {i + 1}) is nonzero")
    return a.astype(np.int8)


def encode(ld: LabeledDigraph) -> np.ndarray:
    p = ld.p
    lab = np.asarray(ld.labels)
    same = lab[:, None] == lab[None, :]
    arc = ld.digraph.adjacency_matrix().astype(bool)
    a = np.where(arc, np.where(same, 2, 1), np.where(same, -1, 0)).astype(np.int8)
    a[np.arange(p), np.arange(p)] = 0
    return a


def _same(a: np.ndarray) -> np.ndarray:
    s = np.isin(a, SAME)
    np.fill_diagonal(s, True)
    return s


def validate(M) -> tuple[bool, list[tuple[str, int, int, int]]]:
    """Check the two triple conditions over every ``(i, j, k)`` with ``i != j != k``.

    (i)  ``a_ij`` and ``a_jk`` in {2, -1} implies ``a_ik`` in {2, -1};
    (ii) ``a_ij`` in {2, -1} and ``a_jk`` in {0, 1} implies ``a_ik`` in {0, 1}.

    ``i == k`` is allowed, with the diagonal read as same-label; this is what
    rejects an asymmetric same-label pattern. Violations are
    ``(condition, i, j, k)`` with 0-based indices, sorted by ``(i, j, k)``.
    """
    a = as_lmatrix(M)
    p = a.shape[0]
    same = _same(a)
    violations = []
    for i in range(p):
        for j in range(p):
            if j == i or not same[i, j]:
                continue
            for k in range(p):
                if k == j:
                    continue
                if same[j, k] and not same[i, k]:
                    violations.append(("i", i, j, k))
                elif not same[j, k] and same[i, k]:
                    violations.append(("ii", i, j, k))
    violations.sort(key=lambda t: (t[1], t[2], t[3], t[0]))
    return not violations, violations


def validate_distinct_triples(M) -> tuple[bool, list[tuple[str, int, int, int]]]:
    """The triple conditions over pairwise-distinct ``i, j, k`` only.

    Kept for comparison: this reading accepts matrices whose same-label
    pattern is not symmetric, which no labeled digraph produces.
    """
    ok, violations = validate(M)
    violations = [t for t in violations if t[1] != t[3]]
    return not violations, violations


def decode(M) -> LabeledDigraph:
    a = as_lmatrix(M)
    ok, violations = validate(a)
    if not ok:
        cond, i, j, k = violations[0]
        raise InvalidMatrixError(
            f"condition ({cond}) fails at (i, j, k) = ({i + 1}, {j + 1}, {k + 1})", violations
        )
    p = a.shape[0]
    same = _same(a)
    assert np.array_equal(same, same.T), "same-label relation must be symmetric for a valid matrix"
    labels = [0] * p
    k = 0
    for i in range(p):
        if labels[i] == 0:
            k += 1
            for j in np.flatnonzero(same[i]):
                labels[j] = k
    arcs = [(int(i), int(j)) for i, j in np.argwhere(np.isin(a, (2, 1)))]
    return LabeledDigraph(Digraph(p, arcs), tuple(labels))


def color_class_of(M, i: int) -> list[int]:
    a = as_lmatrix(M)
    ok, violations = validate(a)
    if not ok:
        raise InvalidMatrixError("matrix is not an L-matrix", violations)
    return sorted({i} | {int(j) for j in np.flatnonzero(np.isin(a[i], SAME))})


def acyclic_color_matrix_literal(M) -> bool:
    """Every off-diagonal entry is 2 or -1, and ``a_ij == 2`` exactly when ``a_ji == -1``."""
    a = as_lmatrix(M)
    off = ~np.eye(a.shape[0], dtype=bool)
    if not np.all(np.isin(a[off], SAME)):
        return False
    return bool(np.all(((a == 2) == (a.T == -1))[off]))


@dataclass(frozen=True)
class AcyclicCheck:
    literal: bool
    semantic: bool

    @property
    def discrepancy(self) -> bool:
        return self.literal != self.semantic

    def to_json(self):
        return {"literal": self.literal, "semantic": self.semantic, "discrepancy": self.discrepancy}


def acyclic_color_matrix_semantic(M) -> AcyclicCheck:
    """Decoded digraph is acyclic and carries a single label."""
    ld = decode(M)
    semantic = is_acyclic(ld.digraph)[0] and len(set(ld.labels)) <= 1
    return AcyclicCheck(acyclic_color_matrix_literal(M), semantic)


def all_candidate_matrices(p: int) -> Iterable[np.ndarray]:
    """Every zero-diagonal ``p x p`` matrix over {2, 1, 0, -1}."""
    off = [(i, j) for i in range(p) for j in range(p) if i != j]
    vals = np.array(ENTRY_VALUES, dtype=np.int8)
    for code in range(4 ** len(off)):
        a = np.zeros((p, p), dtype=np.int8)
        for i, j in off:
            a[i, j] = vals[code % 4]
            code //= 4
        yield a


def to_csv(M) -> str:
    a = as_lmatrix(M)
    return "".join(",".join(str(int(x)) for x in row) + "\n" for row in a)


def from_csv(text: str) -> np.ndarray:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rows.append([int(tok) for tok in line.split(",")])
        except ValueError as exc:
            raise InvalidMatrixError(f"line {lineno}: {exc}") from None
    if any(len(r) != len(rows) for r in rows):
        raise InvalidMatrixError(f"matrix CSV is not square ({len(rows)} rows)")
    return as_lmatrix(np.array(rows, dtype=np.int64).reshape(len(rows), len(rows)))


def pretty(M) -> str:
    a = as_lmatrix(M)
    p = a.shape[0]
    names = [f"v{i + 1}" for i in range(p)]
    width = max([3] + [len(n) for n in names])
    lines = [" " * width + " " + " ".join(n.rjust(width) for n in names)]
    for i in range(p):
        lines.append(names[i].rjust(width) + " " + " ".join(str(int(x)).rjust(width) for x in a[i]))
    return "\n".join(lines) + "\n"
