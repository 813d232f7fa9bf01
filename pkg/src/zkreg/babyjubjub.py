"""Twisted-Edwards curve embedded in the proof field (BabyJubJub).

a*x^2 + y^2 = 1 + d*x^2*y^2 over the BN254 scalar field.  All signature and
key material lives in the prime-order subgroup generated by BASE; the unified
addition law used here is the same one the circuit gadgets constrain, so the
two sides agree bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import P, FieldError, fe_from_hex, fe_to_hex, finv

A = 168700
D = 168696

# Order of the prime subgroup (curve order = 8 * SUBGROUP_ORDER).
SUBGROUP_ORDER = 2736030358979909402780800718157159386076813972158567259200215660948447373041

# Generator of the prime-order subgroup (8 * raw curve generator).
BASE = (
    5299619240641551281634865583518297030282874472190772894086521144482721001553,
    16950150798460657717958625567821834550301663161624707787222815936182638968203,
)

IDENTITY = (0, 1)

Point = tuple[int, int]


class CurveError(ValueError):
    """Raised for off-curve points or malformed curve material."""


def is_on_curve(point: Point) -> bool:
    x, y = point
    if not (0 <= x < P and 0 <= y < P):
        return False
    x2 = x * x % P
    y2 = y * y % P
    return (A * x2 + y2) % P == (1 + D * x2 % P * y2) % P


def check_point(point: Point) -> Point:
    if not is_on_curve(point):
        raise CurveError("point is not on the curve")
    return point


def add(p1: Point, p2: Point) -> Point:
    """Unified twisted-Edwards addition (complete on the prime subgroup)."""
    x1, y1 = p1
    x2, y2 = p2
    beta = x1 * y2 % P
    gamma = y1 * x2 % P
    delta = (y1 - A * x1) * (x2 + y2) % P
    tau = beta * gamma % P
    x3 = (beta + gamma) * finv(1 + D * tau) % P
    y3 = (delta + A * beta - gamma) * finv(1 - D * tau) % P
    return (x3, y3)


def double(p: Point) -> Point:
    return add(p, p)


def neg(p: Point) -> Point:
    return (-p[0] % P, p[1])


def scalar_mul(k: int, p: Point) -> Point:
    result = IDENTITY
    addend = p
    k = int(k)
    if k < 0:
        raise CurveError("negative scalar")
    while k:
        if k & 1:
            result = add(result, addend)
        addend = add(addend, addend)
        k >>= 1
    return result


def in_subgroup(p: Point) -> bool:
    return is_on_curve(p) and scalar_mul(SUBGROUP_ORDER, p) == IDENTITY


def point_to_hex(p: Point) -> str:
    return fe_to_hex(p[0]) + fe_to_hex(p[1])


def point_from_hex(text: str) -> Point:
    if len(text) != 128:
        raise CurveError("point hex must be 128 chars (two 32-byte coordinates)")
    point = (fe_from_hex(text[:64]), fe_from_hex(text[64:]))
    return check_point(point)


@dataclass(frozen=True)
class SigKeyPair:
    """EdDSA keypair on the embedded curve; public = secret * BASE."""

    secret: int
    public: Point

    def __post_init__(self):
        if not 0 < self.secret < SUBGROUP_ORDER:
            raise CurveError("secret scalar out of range")
        if not is_on_curve(self.public):
            raise CurveError("public key off curve")


def keygen(seed: bytes) -> SigKeyPair:
    """Derive a keypair deterministically from 32 bytes of entropy."""
    import hashlib

    if len(seed) != 32:
        raise CurveError(f"seed must be 32 bytes, got {len(seed)}")
    digest = hashlib.sha512(b"zkreg-eddsa-key" + seed).digest()
    secret = int.from_bytes(digest[:32], "little") % SUBGROUP_ORDER
    if secret == 0:  # pragma: no cover - probability ~2^-251
        secret = 1
    return SigKeyPair(secret=secret, public=scalar_mul(secret, BASE))
