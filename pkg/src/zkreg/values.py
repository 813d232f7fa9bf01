"""Attribute values and their field-element encodings.

Four value kinds cover the attribute catalogue: 64-bit unsigned integers,
byte strings, dates as Unix seconds, and device public keys (the device-key
certificate claim carries the key itself as its value).  Encoding is
injective within each kind: numerics embed directly, strings hash over
31-byte chunks, and keys hash both coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Union

from . import babyjubjub as bjj
from .poseidon import hash_bytes, hash_fields

UINT_BOUND = 1 << 64

KIND_UINT = "uint"
KIND_STRING = "string"
KIND_DATE = "date"
KIND_PUBKEY = "pubkey"

KINDS = (KIND_UINT, KIND_STRING, KIND_DATE, KIND_PUBKEY)


class ValueError_(ValueError):
    """Raised for kind/payload mismatches and out-of-range numerics."""


@dataclass(frozen=True)
class AttributeValue:
    kind: str
    payload: Union[int, bytes, bjj.Point]

    def __post_init__(self):
        if self.kind in (KIND_UINT, KIND_DATE):
            if not isinstance(self.payload, int) or isinstance(self.payload, bool):
                raise ValueError_(f"{self.kind} payload must be int")
            if not 0 <= self.payload < UINT_BOUND:
                raise ValueError_(f"{self.kind} payload must be in [0, 2^64)")
        elif self.kind == KIND_STRING:
            if not isinstance(self.payload, bytes):
                raise ValueError_("string payload must be bytes")
        elif self.kind == KIND_PUBKEY:
            if not (isinstance(self.payload, tuple) and len(self.payload) == 2):
                raise ValueError_("pubkey payload must be an (x, y) tuple")
            if not bjj.is_on_curve(self.payload):
                raise ValueError_("pubkey payload off curve")
        else:
            raise ValueError_(f"unknown value kind {self.kind!r}")


def uint(value: int) -> AttributeValue:
    return AttributeValue(KIND_UINT, value)


def string(value: Union[str, bytes]) -> AttributeValue:
    if isinstance(value, str):
        value = value.encode()
    return AttributeValue(KIND_STRING, value)


def date(value: Union[int, str, datetime]) -> AttributeValue:
    """Date from Unix seconds, an ISO-8601 string, or a datetime."""
    if isinstance(value, str):
        value = datetime.fromisoformat(value.replace("Z", "+00:00"))
    if isinstance(value, datetime):
        if value.tzinfo is None:
            value = value.replace(tzinfo=timezone.utc)
        value = int(value.timestamp())
    return AttributeValue(KIND_DATE, value)


def pubkey(point: bjj.Point) -> AttributeValue:
    return AttributeValue(KIND_PUBKEY, point)


def encode_value(value: AttributeValue) -> int:
    """Map an attribute value to one field element.

    uint/date embed directly (both < 2^64 < P), strings hash their bytes,
    and public keys hash both coordinates so the circuit can re-derive the
    encoding from the point with a single permutation.
    """
    if value.kind in (KIND_UINT, KIND_DATE):
        return value.payload
    if value.kind == KIND_STRING:
        return hash_bytes(value.payload)
    if value.kind == KIND_PUBKEY:
        x, y = value.payload
        return hash_fields([x, y])
    raise ValueError_(f"unknown value kind {value.kind!r}")


def value_to_json(value: AttributeValue) -> dict:
    if value.kind in (KIND_UINT, KIND_DATE):
        return {"kind": value.kind, "payload": value.payload}
    if value.kind == KIND_STRING:
        return {"kind": value.kind, "payload": value.payload.hex()}
    return {"kind": value.kind, "payload": bjj.point_to_hex(value.payload)}


def value_from_json(obj: dict) -> AttributeValue:
    kind = obj["kind"]
    if kind in (KIND_UINT, KIND_DATE):
        return AttributeValue(kind, int(obj["payload"]))
    if kind == KIND_STRING:
        return AttributeValue(kind, bytes.fromhex(obj["payload"]))
    if kind == KIND_PUBKEY:
        return AttributeValue(kind, bjj.point_from_hex(obj["payload"]))
    raise ValueError_(f"unknown value kind {kind!r}")
