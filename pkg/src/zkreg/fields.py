"""Scalar-field arithmetic for the proof system's pairing curve.

All circuit values, hash states, and embedded-curve coordinates live in the
scalar field of BN254 (alt_bn128).  Elements are plain Python ints in [0, P);
helpers here keep them canonical and give fixed-width serialization.
"""

from __future__ import annotations

import gmpy2

# BN254 scalar-field modulus (also the base field of the embedded
# twisted-Edwards signature curve, so signatures are provable in-circuit).
P = 21888242871839275222246405745257275088548364400416034343698204186575808495617

_P_MPZ = gmpy2.mpz(P)

FIELD_BYTES = 32

# P - 1 = 2^TWO_ADICITY * odd; 5 generates the multiplicative group.
TWO_ADICITY = 28
_GENERATOR = 5


class FieldError(ValueError):
    """Raised for out-of-range or malformed field-element material."""


def fe(value: int) -> int:
    """Reduce an int into canonical [0, P) form."""
    return value % P


def check_fe(value: int) -> int:
    """Validate that ``value`` is already canonical; return it unchanged."""
    if not isinstance(value, int) or isinstance(value, bool):
        raise FieldError(f"field element must be int, got {type(value).__name__}")
    if not 0 <= value < P:
        raise FieldError("field element out of range [0, P)")
    return value


def fadd(a: int, b: int) -> int:
    return (a + b) % P


def fsub(a: int, b: int) -> int:
    return (a - b) % P


def fmul(a: int, b: int) -> int:
    return (a * b) % P


def fneg(a: int) -> int:
    return -a % P


def finv(a: int) -> int:
    if a % P == 0:
        raise FieldError("cannot invert 0")
    return int(gmpy2.invert(a, _P_MPZ))


def fdiv(a: int, b: int) -> int:
    return (a * finv(b)) % P


def fpow(a: int, e: int) -> int:
    return pow(a, e, P)


def fe_to_bytes(value: int) -> bytes:
    """Fixed-width little-endian serialization (32 bytes)."""
    return check_fe(value).to_bytes(FIELD_BYTES, "little")


def fe_from_bytes(data: bytes) -> int:
    if len(data) != FIELD_BYTES:
        raise FieldError(f"expected {FIELD_BYTES} bytes, got {len(data)}")
    value = int.from_bytes(data, "little")
    if value >= P:
        raise FieldError("non-canonical field element encoding")
    return value


def fe_to_hex(value: int) -> str:
    return fe_to_bytes(value).hex()


def fe_from_hex(text: str) -> int:
    return fe_from_bytes(bytes.fromhex(text))


def root_of_unity(order: int) -> int:
    """Primitive ``order``-th root of unity; ``order`` must be a power of two."""
    if order <= 0 or order & (order - 1):
        raise FieldError("order must be a power of two")
    if order > (1 << TWO_ADICITY):
        raise FieldError(f"field supports radix-2 domains only up to 2^{TWO_ADICITY}")
    root = pow(_GENERATOR, (P - 1) >> TWO_ADICITY, P)
    for _ in range((1 << TWO_ADICITY).bit_length() - order.bit_length()):
        root = root * root % P
    return root


def batch_inverse(values: list[int]) -> list[int]:
    """Montgomery batch inversion; every input must be nonzero."""
    n = len(values)
    if n == 0:
        return []
    prefix = [0] * n
    acc = 1
    for i, v in enumerate(values):
        if v % P == 0:
            raise FieldError("cannot invert 0")
        prefix[i] = acc
        acc = acc * v % P
    inv = finv(acc)
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = inv * prefix[i] % P
        inv = inv * values[i] % P
    return out
