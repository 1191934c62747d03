"""Sign matrices from qualifying codes, and exact quasi-unbiasedness checks.

The map psi sends 0 -> +1 and 1 -> -1 coordinatewise, so the inner
product of psi(x) and psi(y) is n - 2 wt(x + y).  Each coset of the
reference RM(1,m) inside a qualifying code is closed under complement;
picking one vector per antipodal pair and applying psi yields rows of a
Hadamard matrix, and distinct cosets yield quasi-unbiased pairs for
parameters (n, n, (n/2a)^2, 4a^2).  Verification never materializes
sqrt(a): squared entries are compared against a exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from fourweight._bits import BitVector
from fourweight.conditions import FourWeightCertificate, reference_rm, require_certificate
from fourweight.errors import InputError
from fourweight.linear import LinearCode


def psi(v: BitVector) -> np.ndarray:
    """Coordinatewise sign vector: 0 -> +1, 1 -> -1 (int8, coordinate 1 first)."""
    n = v.n
    bits = (np.uint64(v.bits) >> np.arange(n - 1, -1, -1, dtype=np.uint64)) & np.uint64(1)
    return (1 - 2 * bits.astype(np.int8)).astype(np.int8)


def psi_inverse(row: np.ndarray) -> BitVector:
    n = len(row)
    bits = 0
    for i, e in enumerate(row):
        if e == -1:
            bits |= 1 << (n - 1 - i)
        elif e != 1:
            raise InputError(f"entry {e} is not a sign")
    return BitVector(n, bits)


def antipodal_split(
    coset: Sequence[BitVector], rng: random.Random | None = None
) -> list[BitVector]:
    """One vector per antipodal pair {c, c + 1} of a complement-closed coset.

    The canonical choice keeps the member whose first coordinate is 0, so
    the psi image starts with +1; passing an rng picks a random member per
    pair instead.  Output is sorted lexicographically.
    """
    if not coset:
        raise InputError("empty coset")
    n = coset[0].n
    if any(v.n != n for v in coset):
        raise InputError("coset mixes vector lengths")
    values = {v.bits for v in coset}
    if len(values) != len(coset):
        raise InputError("coset contains repeated vectors")
    ones = (1 << n) - 1
    missing = [v for v in values if v ^ ones not in values]
    if missing:
        raise InputError(
            f"coset is not closed under complement: {BitVector(n, missing[0]).to01()}"
            " has no antipodal partner"
        )
    picked = []
    for v in sorted(values):
        partner = v ^ ones
        if rng is None:
            if not (v >> (n - 1)) & 1:
                picked.append(v)
        else:
            if v < partner:
                picked.append(v if rng.random() < 0.5 else partner)
    picked.sort()
    return [BitVector(n, v) for v in picked]


@dataclass(frozen=True)
class QuwmParams:
    """Parameter quadruple (n, k, l, a); necessarily l = k^2 / a."""

    n: int
    k: int
    l: int
    a: int

    def __post_init__(self) -> None:
        if min(self.n, self.k, self.l, self.a) <= 0:
            raise InputError("parameters must be positive")
        if self.k * self.k != self.l * self.a:
            raise InputError(
                f"inconsistent parameters: l must be k^2/a, got {self.as_tuple()}"
            )

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.l, self.a)


def verify_weighing(w_matrix: np.ndarray, weight: int) -> bool:
    """True iff entries lie in {-1,0,1}, rows/columns have exactly `weight` nonzeros, and W W^T = weight I."""
    w = np.asarray(w_matrix, dtype=np.int64)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        return False
    if not np.isin(w, (-1, 0, 1)).all():
        return False
    nz = w != 0
    if not (nz.sum(axis=1) == weight).all() or not (nz.sum(axis=0) == weight).all():
        return False
    n = w.shape[0]
    return bool((w @ w.T == weight * np.eye(n, dtype=np.int64)).all())


def verify_quasi_unbiased(w1: np.ndarray, w2: np.ndarray, params: QuwmParams) -> bool:
    """Exact check that (1/sqrt(a)) W1 W2^T is a weighing matrix of weight l.

    All arithmetic stays in integers: entries e of W1 W2^T must satisfy
    e^2 in {0, a}, each row and column must carry exactly l nonzeros, and
    (W1 W2^T)(W1 W2^T)^T must equal a*l*I.
    """
    return _quasi_unbiased_report(w1, w2, params)["ok"]


def _quasi_unbiased_report(w1: np.ndarray, w2: np.ndarray, params: QuwmParams) -> dict:
    a1 = np.asarray(w1, dtype=np.int64)
    a2 = np.asarray(w2, dtype=np.int64)
    n = params.n
    if a1.shape != (n, n) or a2.shape != (n, n):
        raise InputError(f"matrices must both have order {n}")
    prod = a1 @ a2.T
    sq = prod * prod
    bad = np.argwhere((sq != 0) & (sq != params.a))
    if bad.size:
        i, j = map(int, bad[0])
        return {"ok": False, "bad_entry": (i, j, int(prod[i, j])), "zero_counts": None}
    nz = prod != 0
    counts_ok = (nz.sum(axis=1) == params.l).all() and (nz.sum(axis=0) == params.l).all()
    gram_ok = (prod @ prod.T == params.a * params.l * np.eye(n, dtype=np.int64)).all()
    zero_counts = sorted(set(int(c) for c in (~nz).sum(axis=1)))
    return {
        "ok": bool(counts_ok and gram_ok),
        "bad_entry": None,
        "zero_counts": zero_counts,
    }


@dataclass
class QuwmVerification:
    all_pass: bool
    hadamard_ok: tuple[bool, ...]
    failed_pairs: tuple[tuple[int, int], ...]
    zero_counts_per_row: tuple[int, ...]


@dataclass(frozen=True)
class QuwmSet:
    """Matrices built from one code, with their common parameters."""

    params: QuwmParams
    matrices: tuple[np.ndarray, ...]
    source: str | None = None

    def __len__(self) -> int:
        return len(self.matrices)

    def verify(self) -> QuwmVerification:
        """Full pairwise verification; aggregates every failure, not the first."""
        n = self.params.n
        hadamard_ok = tuple(verify_weighing(h, n) for h in self.matrices)
        failed = []
        zero_counts: set[int] = set()
        for i in range(len(self.matrices)):
            for j in range(i + 1, len(self.matrices)):
                rep = _quasi_unbiased_report(self.matrices[i], self.matrices[j], self.params)
                if not rep["ok"]:
                    failed.append((i, j))
                else:
                    zero_counts.update(rep["zero_counts"])
        return QuwmVerification(
            all_pass=all(hadamard_ok) and not failed,
            hadamard_ok=hadamard_ok,
            failed_pairs=tuple(failed),
            zero_counts_per_row=tuple(sorted(zero_counts)),
        )


def build_quwm_set(
    code: LinearCode,
    cert: FourWeightCertificate | None = None,
    rng: random.Random | None = None,
    source: str | None = None,
) -> QuwmSet:
    """The 2^(k-m-1) Hadamard matrices generated by a qualifying code.

    Matrix i collects the psi images of the antipodal split of the i-th
    coset of the reference RM(1,m), rows in lexicographic order of the
    underlying codewords; the construction is deterministic unless an rng
    is supplied for the split choice.
    """
    if cert is None:
        cert = require_certificate(code)
    rm = reference_rm(cert.m)
    table = code.coset_table(rm)
    rm_words = sorted(int(w) for w in rm.words())
    n = code.n
    matrices = []
    for rep in table.representatives:
        coset = [BitVector(n, w ^ rep.bits) for w in rm_words]
        chosen = antipodal_split(coset, rng=rng)
        rows = np.stack([psi(v) for v in chosen])
        matrices.append(rows)
    params = QuwmParams(n=n, k=n, l=cert.l, a=4 * cert.a * cert.a)
    assert len(matrices) == cert.qw_set_size
    return QuwmSet(params=params, matrices=tuple(matrices), source=source)


def matrix_to_text(w: np.ndarray) -> str:
    return "\n".join(" ".join(str(int(e)) for e in row) for row in w) + "\n"


def matrix_from_text(text: str) -> np.ndarray:
    rows = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        try:
            rows.append([int(tok) for tok in ln.split()])
        except ValueError:
            raise InputError(f"bad matrix line: {ln!r}") from None
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise InputError("matrix rows must be nonempty and equal length")
    arr = np.array(rows, dtype=np.int64)
    if not np.isin(arr, (-1, 0, 1)).all():
        raise InputError("matrix entries must be -1, 0 or 1")
    return arr
