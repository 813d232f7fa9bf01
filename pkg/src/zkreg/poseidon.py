"""SNARK-friendly sponge hash over the scalar field.

x^5 S-box Poseidon permutation with 8 full rounds and a per-width partial
round count taken from the standard 128-bit parameter table.  Round constants
are derived from a fixed SHAKE-256 stream and the MDS matrix is a Cauchy
matrix, so every build regenerates identical parameters.  The circuit gadget
mirrors this permutation constraint-for-constraint; byte-oriented hashes are
banned inside circuits.
"""

from __future__ import annotations

import hashlib

from .fields import P, FieldError, finv

FULL_ROUNDS = 8
# Partial rounds for state width t = 2..10 (alpha = 5, 128-bit security).
_PARTIAL_ROUNDS = {2: 56, 3: 57, 4: 56, 5: 60, 6: 60, 7: 63, 8: 64, 9: 63, 10: 60}

MAX_WIDTH = max(_PARTIAL_ROUNDS)
# hash_fields absorbs up to MAX_ARITY inputs in one permutation; longer
# inputs are folded in length-tagged blocks of CHUNK_ARITY.
MAX_ARITY = MAX_WIDTH - 1
CHUNK_ARITY = MAX_ARITY - 1

_PARAM_SEED = b"zkreg-poseidon-v1"


def _constant_stream(label: bytes, count: int) -> list[int]:
    """Field elements from a SHAKE-256 stream, rejection-sampled below P."""
    out: list[int] = []
    counter = 0
    while len(out) < count:
        digest = hashlib.shake_256(
            _PARAM_SEED + b"/" + label + b"/" + counter.to_bytes(4, "little")
        ).digest(32)
        candidate = int.from_bytes(digest, "little")
        if candidate < P:
            out.append(candidate)
        counter += 1
    return out


def _mds_matrix(t: int) -> list[list[int]]:
    # Cauchy matrix over x_i = i, y_j = t + j; all denominators distinct and
    # nonzero, which makes the matrix MDS over a prime field.
    return [[finv((i + (t + j)) % P) for j in range(t)] for i in range(t)]


_cache: dict[int, tuple[list[list[int]], list[list[int]], int]] = {}


def params(t: int) -> tuple[list[list[int]], list[list[int]], int]:
    """(round_constants[r][i], mds[i][j], partial_rounds) for state width t."""
    if t not in _PARTIAL_ROUNDS:
        raise FieldError(f"unsupported poseidon width {t}")
    if t not in _cache:
        rp = _PARTIAL_ROUNDS[t]
        rounds = FULL_ROUNDS + rp
        flat = _constant_stream(b"rc-t%d" % t, rounds * t)
        rc = [flat[r * t : (r + 1) * t] for r in range(rounds)]
        _cache[t] = (rc, _mds_matrix(t), rp)
    return _cache[t]


def permutation(state: list[int]) -> list[int]:
    """Apply the Poseidon permutation in place semantics (returns new list)."""
    t = len(state)
    rc, mds, rp = params(t)
    half = FULL_ROUNDS // 2
    s = [x % P for x in state]
    for r in range(FULL_ROUNDS + rp):
        s = [(x + c) % P for x, c in zip(s, rc[r])]
        if r < half or r >= half + rp:
            s = [_exp5(x) for x in s]
        else:
            s[0] = _exp5(s[0])
        s = [sum(m_ij * x for m_ij, x in zip(row, s)) % P for row in mds]
    return s


def _exp5(x: int) -> int:
    x2 = x * x % P
    x4 = x2 * x2 % P
    return x4 * x % P


def hash_fields(inputs: list[int]) -> int:
    """Hash 1..n field elements to one field element.

    Up to MAX_ARITY inputs go through a single permutation with a zero
    capacity element.  Longer inputs fold CHUNK_ARITY-sized blocks into a
    running digest seeded with the input length, so lengths are domain
    separated.
    """
    n = len(inputs)
    if n == 0:
        raise FieldError("hash_fields requires at least one input")
    for x in inputs:
        if not 0 <= x < P:
            raise FieldError("hash input out of field range")
    if n <= MAX_ARITY:
        return permutation([0] + list(inputs))[0]
    acc = n % P
    for start in range(0, n, CHUNK_ARITY):
        block = list(inputs[start : start + CHUNK_ARITY])
        block += [0] * (CHUNK_ARITY - len(block))
        acc = permutation([0, acc] + block)[0]
    return acc


def hash_bytes(data: bytes) -> int:
    """Hash an arbitrary byte string by 31-byte little-endian chunking."""
    if len(data) == 0:
        return hash_fields([0])
    chunks = [
        int.from_bytes(data[i : i + 31], "little") for i in range(0, len(data), 31)
    ]
    # Length tag keeps strings with different trailing-zero padding apart.
    return hash_fields(chunks + [len(data) % P])
