"""EdDSA over the embedded curve with the Poseidon challenge hash.

Messages are lists of field elements.  The nonce is a hash of the secret key
and message (RFC-6979 style), so signing is deterministic and attestation
runs are reproducible.  Verification is the plain S*B == R + h*A equation,
which is exactly what the signature circuit gadget constrains.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from . import babyjubjub as bjj
from .fields import P, fe_from_hex, fe_to_hex
from .poseidon import hash_fields


class SignatureError(ValueError):
    """Raised for malformed signatures or off-curve keys."""


@dataclass(frozen=True)
class Signature:
    R: bjj.Point
    S: int

    def __post_init__(self):
        if not 0 <= self.S < bjj.SUBGROUP_ORDER:
            raise SignatureError("signature scalar out of range")

    def to_hex(self) -> str:
        return bjj.point_to_hex(self.R) + fe_to_hex(self.S)

    @classmethod
    def from_hex(cls, text: str) -> "Signature":
        if len(text) != 192:
            raise SignatureError("signature hex must be 192 chars")
        R = (fe_from_hex(text[:64]), fe_from_hex(text[64:128]))
        if not bjj.is_on_curve(R):
            raise SignatureError("signature nonce point off curve")
        return cls(R=R, S=fe_from_hex(text[128:]))


def _message_digest(message: list[int]) -> int:
    if not message:
        raise SignatureError("cannot sign an empty message")
    for m in message:
        if not 0 <= m < P:
            raise SignatureError("message element out of field range")
    return hash_fields(list(message))


def challenge(R: bjj.Point, public: bjj.Point, msg_digest: int) -> int:
    """Fiat-Shamir challenge binding nonce, key, and message digest."""
    return hash_fields([R[0], R[1], public[0], public[1], msg_digest])


def sign(secret: int, message: list[int]) -> Signature:
    if not 0 < secret < bjj.SUBGROUP_ORDER:
        raise SignatureError("secret scalar out of range")
    digest = _message_digest(message)
    nonce_seed = hashlib.sha512(
        b"zkreg-eddsa-nonce"
        + secret.to_bytes(32, "little")
        + digest.to_bytes(32, "little")
    ).digest()
    r = int.from_bytes(nonce_seed, "little") % bjj.SUBGROUP_ORDER
    if r == 0:  # pragma: no cover - probability ~2^-504
        r = 1
    R = bjj.scalar_mul(r, bjj.BASE)
    public = bjj.scalar_mul(secret, bjj.BASE)
    h = challenge(R, public, digest)
    S = (r + h * secret) % bjj.SUBGROUP_ORDER
    return Signature(R=R, S=S)


def verify_sig(public: bjj.Point, message: list[int], sig: Signature) -> bool:
    """True iff the verification equation holds; off-curve inputs are errors."""
    if not bjj.is_on_curve(public):
        raise SignatureError("public key off curve")
    if not isinstance(sig, Signature):
        raise SignatureError("malformed signature object")
    if not bjj.is_on_curve(sig.R):
        return False
    if not 0 <= sig.S < bjj.SUBGROUP_ORDER:
        return False
    digest = _message_digest(message)
    h = challenge(sig.R, public, digest)
    lhs = bjj.scalar_mul(sig.S, bjj.BASE)
    rhs = bjj.add(sig.R, bjj.scalar_mul(h, public))
    return lhs == rhs
