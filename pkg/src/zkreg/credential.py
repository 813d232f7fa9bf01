"""Credential schema, claims, and the attestation that turns them verifiable.

A credential is a set of (subject, attribute, value) claims about one device.
Attestation signs each claim individually under the issuer key, so a later
presentation can load exactly the claims it needs and no others.  Schema ids
are content hashes of the canonical schema body, letting anyone check schema
integrity without trusting the registry that served it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import babyjubjub as bjj
from . import eddsa
from .fields import P, fe_from_hex, fe_to_hex
from .poseidon import hash_bytes
from .values import KINDS, AttributeValue, encode_value, value_from_json, value_to_json

WALLET_VERSION = 1
SCHEMA_VERSION = 1


class CredentialError(ValueError):
    """Raised for schema violations, mixed subjects, and malformed envelopes."""


@dataclass(frozen=True)
class SchemaAttribute:
    attribute_id: int
    name: str
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CredentialError(f"unknown attribute kind {self.kind!r}")


@dataclass(frozen=True)
class CredentialSchema:
    name: str
    issuer_name: str
    attributes: tuple[SchemaAttribute, ...]

    def __post_init__(self):
        ids = [a.attribute_id for a in self.attributes]
        if ids != list(range(len(ids))):
            raise CredentialError("attribute ids must be dense 0..n-1")
        names = {a.name for a in self.attributes}
        if len(names) != len(self.attributes):
            raise CredentialError("attribute names must be unique")

    @property
    def schema_id(self) -> int:
        return hash_bytes(self.canonical_body())

    def canonical_body(self) -> bytes:
        body = {
            "version": SCHEMA_VERSION,
            "name": self.name,
            "issuer_name": self.issuer_name,
            "attributes": [
                {"attribute_id": a.attribute_id, "name": a.name, "kind": a.kind}
                for a in self.attributes
            ],
        }
        return json.dumps(body, sort_keys=True, separators=(",", ":")).encode()

    def attribute(self, attribute_id: int) -> SchemaAttribute:
        if not 0 <= attribute_id < len(self.attributes):
            raise CredentialError(f"unknown attribute id {attribute_id}")
        return self.attributes[attribute_id]

    def attribute_by_name(self, name: str) -> SchemaAttribute:
        for a in self.attributes:
            if a.name == name:
                return a
        raise CredentialError(f"unknown attribute name {name!r}")

    def to_json(self) -> dict:
        return json.loads(self.canonical_body())

    @classmethod
    def from_json(cls, obj: dict) -> "CredentialSchema":
        if obj.get("version") != SCHEMA_VERSION:
            raise CredentialError("unsupported schema envelope version")
        return cls(
            name=obj["name"],
            issuer_name=obj["issuer_name"],
            attributes=tuple(
                SchemaAttribute(a["attribute_id"], a["name"], a["kind"])
                for a in obj["attributes"]
            ),
        )


@dataclass(frozen=True)
class Claim:
    subject_id: int
    attribute_id: int
    value: AttributeValue

    def __post_init__(self):
        if not 0 <= self.subject_id < P:
            raise CredentialError("subject id out of field range")


@dataclass(frozen=True)
class VerifiableClaim:
    claim: Claim
    signature: eddsa.Signature


@dataclass(frozen=True)
class VerifiableCredential:
    schema_id: int
    issuer_pubkey: bjj.Point
    claims: tuple[VerifiableClaim, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.claims:
            raise CredentialError("credential must contain at least one claim")
        subjects = {vc.claim.subject_id for vc in self.claims}
        if len(subjects) != 1:
            raise CredentialError("claims must share one subject")

    @property
    def subject_id(self) -> int:
        return self.claims[0].claim.subject_id

    def claim_for(self, attribute_id: int) -> VerifiableClaim:
        for vcl in self.claims:
            if vcl.claim.attribute_id == attribute_id:
                return vcl
        raise CredentialError(f"credential holds no claim for attribute {attribute_id}")


def claim_message(
    schema_id: int, subject_id: int, attribute_id: int, value: AttributeValue
) -> list[int]:
    """Signed-message layout for one claim.

    Position fixes meaning: [schema, subject, attribute, encoded value], so
    equal claims under different schemas or attributes sign distinct messages.
    """
    return [schema_id % P, subject_id % P, attribute_id % P, encode_value(value)]


def _check_claim_against_schema(claim: Claim, schema: CredentialSchema) -> None:
    attr = schema.attribute(claim.attribute_id)
    if attr.kind != claim.value.kind:
        raise CredentialError(
            f"attribute {attr.name!r} expects kind {attr.kind}, got {claim.value.kind}"
        )


def attest(
    credential: list[Claim], issuer: bjj.SigKeyPair, schema: CredentialSchema
) -> VerifiableCredential:
    """Sign every claim of a credential individually under the issuer key."""
    if not credential:
        raise CredentialError("cannot attest an empty credential")
    subjects = {c.subject_id for c in credential}
    if len(subjects) != 1:
        raise CredentialError("claims must share one subject")
    schema_id = schema.schema_id
    verifiable = []
    for claim in credential:
        _check_claim_against_schema(claim, schema)
        msg = claim_message(schema_id, claim.subject_id, claim.attribute_id, claim.value)
        verifiable.append(VerifiableClaim(claim, eddsa.sign(issuer.secret, msg)))
    return VerifiableCredential(
        schema_id=schema_id, issuer_pubkey=issuer.public, claims=tuple(verifiable)
    )


def verify_vc(
    vc: VerifiableCredential, issuer_pubkey: bjj.Point, schema: CredentialSchema
) -> bool:
    """Check every claim signature and schema conformance.

    Unknown attribute ids raise (the credential cannot be interpreted); a
    failed signature or schema-id mismatch returns False.
    """
    if vc.schema_id != schema.schema_id:
        return False
    for vcl in vc.claims:
        _check_claim_against_schema(vcl.claim, schema)
        msg = claim_message(
            vc.schema_id, vcl.claim.subject_id, vcl.claim.attribute_id, vcl.claim.value
        )
        if not eddsa.verify_sig(issuer_pubkey, msg, vcl.signature):
            return False
    return True


# -- wallet / schema file envelopes -----------------------------------------


def vc_to_json(vc: VerifiableCredential) -> dict:
    return {
        "version": WALLET_VERSION,
        "kind": "verifiable-credential",
        "schema_id": fe_to_hex(vc.schema_id),
        "issuer_pubkey": bjj.point_to_hex(vc.issuer_pubkey),
        "claims": [
            {
                "subject_id": fe_to_hex(vcl.claim.subject_id),
                "attribute_id": vcl.claim.attribute_id,
                "value": value_to_json(vcl.claim.value),
                "signature": vcl.signature.to_hex(),
            }
            for vcl in vc.claims
        ],
    }


def vc_from_json(obj: dict) -> VerifiableCredential:
    if obj.get("version") != WALLET_VERSION or obj.get("kind") != "verifiable-credential":
        raise CredentialError("unsupported wallet envelope")
    return VerifiableCredential(
        schema_id=fe_from_hex(obj["schema_id"]),
        issuer_pubkey=bjj.point_from_hex(obj["issuer_pubkey"]),
        claims=tuple(
            VerifiableClaim(
                Claim(
                    subject_id=fe_from_hex(c["subject_id"]),
                    attribute_id=int(c["attribute_id"]),
                    value=value_from_json(c["value"]),
                ),
                eddsa.Signature.from_hex(c["signature"]),
            )
            for c in obj["claims"]
        ),
    )


def dumps_canonical(obj: dict) -> str:
    """Canonical text form shared by wallet and schema files."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
