"""Credential model, attestation, and verification."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zkreg import babyjubjub as bjj
from zkreg import credential as cred
from zkreg import eddsa, values
from zkreg.fields import P


def device_schema():
    return cred.CredentialSchema(
        name="device-attributes",
        issuer_name="manufacturer",
        attributes=(
            cred.SchemaAttribute(0, "device_key", "pubkey"),
            cred.SchemaAttribute(1, "firmware_version", "uint"),
            cred.SchemaAttribute(2, "postcode", "uint"),
            cred.SchemaAttribute(3, "measurement_type", "string"),
            cred.SchemaAttribute(4, "manufactured_on", "date"),
        ),
    )


def sample_claims(subject=77, device_key=None):
    claims = [
        cred.Claim(subject, 1, values.uint(7)),
        cred.Claim(subject, 2, values.uint(10115)),
        cred.Claim(subject, 3, values.string("temperature")),
    ]
    if device_key is not None:
        claims.insert(0, cred.Claim(subject, 0, values.pubkey(device_key)))
    return claims


class TestSchema:
    def test_schema_id_recomputes_from_body(self):
        s = device_schema()
        again = cred.CredentialSchema.from_json(s.to_json())
        assert again.schema_id == s.schema_id

    def test_schema_id_changes_with_body(self):
        s = device_schema()
        other = cred.CredentialSchema(
            name="device-attributes-v2",
            issuer_name=s.issuer_name,
            attributes=s.attributes,
        )
        assert other.schema_id != s.schema_id

    def test_sparse_attribute_ids_rejected(self):
        with pytest.raises(cred.CredentialError):
            cred.CredentialSchema(
                name="bad",
                issuer_name="x",
                attributes=(cred.SchemaAttribute(1, "a", "uint"),),
            )

    def test_lookup(self):
        s = device_schema()
        assert s.attribute_by_name("postcode").attribute_id == 2
        with pytest.raises(cred.CredentialError):
            s.attribute(99)


class TestClaimMessage:
    def test_layout(self):
        msg = cred.claim_message(11, 22, 3, values.uint(7))
        assert msg == [11, 22, 3, 7]

    def test_attribute_separation(self):
        a = cred.claim_message(1, 2, 3, values.uint(7))
        b = cred.claim_message(1, 2, 4, values.uint(7))
        assert a != b

    def test_schema_separation(self):
        a = cred.claim_message(1, 2, 3, values.uint(7))
        b = cred.claim_message(9, 2, 3, values.uint(7))
        assert a != b


class TestAttest:
    def setup_method(self):
        self.schema = device_schema()
        self.issuer = bjj.keygen(b"\x21" * 32)
        self.device = bjj.keygen(b"\x22" * 32)

    def test_round_trip(self):
        vc = cred.attest(sample_claims(), self.issuer, self.schema)
        assert len(vc.claims) == 3
        assert cred.verify_vc(vc, self.issuer.public, self.schema)

    def test_device_key_certificate_claim(self):
        # The device-key certificate is an ordinary claim whose value is the
        # device public key, signed like any other claim.
        vc = cred.attest(
            sample_claims(device_key=self.device.public), self.issuer, self.schema
        )
        assert cred.verify_vc(vc, self.issuer.public, self.schema)
        key_claim = vc.claim_for(0)
        assert key_claim.claim.value.payload == self.device.public

    def test_mixed_subjects_rejected(self):
        claims = sample_claims() + [cred.Claim(78, 4, values.date(1700000000))]
        with pytest.raises(cred.CredentialError):
            cred.attest(claims, self.issuer, self.schema)

    def test_kind_mismatch_rejected(self):
        claims = [cred.Claim(77, 1, values.string("not-a-uint"))]
        with pytest.raises(cred.CredentialError):
            cred.attest(claims, self.issuer, self.schema)

    def test_tampered_value_fails_verification(self):
        vc = cred.attest(sample_claims(), self.issuer, self.schema)
        tampered_claim = cred.Claim(77, 1, values.uint(9999))
        claims = (cred.VerifiableClaim(tampered_claim, vc.claims[0].signature),) + vc.claims[1:]
        bad = cred.VerifiableCredential(vc.schema_id, vc.issuer_pubkey, claims)
        assert not cred.verify_vc(bad, self.issuer.public, self.schema)

    def test_unknown_attribute_is_error_not_false(self):
        vc = cred.attest(sample_claims(), self.issuer, self.schema)
        rogue = cred.Claim(77, 9, values.uint(1))
        claims = vc.claims + (cred.VerifiableClaim(rogue, vc.claims[0].signature),)
        bad = cred.VerifiableCredential(vc.schema_id, vc.issuer_pubkey, claims)
        with pytest.raises(cred.CredentialError):
            cred.verify_vc(bad, self.issuer.public, self.schema)

    def test_wrong_issuer_rejected_over_random_pairs(self):
        rng = random.Random(31)
        for _ in range(50):
            issuer = bjj.keygen(rng.randbytes(32))
            other = bjj.keygen(rng.randbytes(32))
            assert issuer.public != other.public
            vc = cred.attest(sample_claims(), issuer, self.schema)
            assert cred.verify_vc(vc, issuer.public, self.schema)
            assert not cred.verify_vc(vc, other.public, self.schema)


KIND_VALUES = {
    "uint": lambda rng: values.uint(rng.randrange(1 << 64)),
    "date": lambda rng: values.date(rng.randrange(1 << 40)),
    "string": lambda rng: values.string(rng.randbytes(rng.randrange(0, 40))),
}


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_attest_verify_property(data):
    # Randomized schemas up to 16 attributes; round trip always verifies and
    # single-claim mutations always break it.
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    n_attrs = rng.randrange(1, 17)
    schema = cred.CredentialSchema(
        name=f"schema-{n_attrs}",
        issuer_name="prop",
        attributes=tuple(
            cred.SchemaAttribute(i, f"attr{i}", rng.choice(list(KIND_VALUES)))
            for i in range(n_attrs)
        ),
    )
    issuer = bjj.keygen(rng.randbytes(32))
    subject = rng.randrange(P)
    claims = [
        cred.Claim(subject, a.attribute_id, KIND_VALUES[a.kind](rng))
        for a in schema.attributes
    ]
    vc = cred.attest(claims, issuer, schema)
    assert cred.verify_vc(vc, issuer.public, schema)

    # Mutate one claim component.
    idx = rng.randrange(len(vc.claims))
    victim = vc.claims[idx]
    mode = rng.choice(["subject", "value", "signature"])
    if mode == "subject" and len(vc.claims) == 1:
        mode = "value"
    if mode == "subject":
        mutated = cred.Claim(
            (victim.claim.subject_id + 1) % P,
            victim.claim.attribute_id,
            victim.claim.value,
        )
        new_vcl = cred.VerifiableClaim(mutated, victim.signature)
    elif mode == "value":
        mutated = cred.Claim(
            victim.claim.subject_id,
            victim.claim.attribute_id,
            KIND_VALUES[schema.attribute(victim.claim.attribute_id).kind](rng),
        )
        if values.encode_value(mutated.value) == values.encode_value(victim.claim.value):
            return
        new_vcl = cred.VerifiableClaim(mutated, victim.signature)
    else:
        sig = victim.signature
        new_vcl = cred.VerifiableClaim(
            victim.claim,
            eddsa.Signature(sig.R, (sig.S + 1) % bjj.SUBGROUP_ORDER),
        )
    claims2 = list(vc.claims)
    claims2[idx] = new_vcl
    try:
        bad = cred.VerifiableCredential(vc.schema_id, vc.issuer_pubkey, tuple(claims2))
    except cred.CredentialError:
        return  # mixed-subject construction rejected outright
    assert not cred.verify_vc(bad, issuer.public, schema)


class TestWallet:
    def test_wallet_round_trip_bit_exact(self):
        schema = device_schema()
        issuer = bjj.keygen(b"\x33" * 32)
        device = bjj.keygen(b"\x34" * 32)
        vc = cred.attest(sample_claims(device_key=device.public), issuer, schema)
        blob = cred.dumps_canonical(cred.vc_to_json(vc))
        again = cred.vc_from_json(__import__("json").loads(blob))
        assert again == vc
        assert cred.dumps_canonical(cred.vc_to_json(again)) == blob

    def test_bad_envelope_rejected(self):
        with pytest.raises(cred.CredentialError):
            cred.vc_from_json({"version": 99, "kind": "verifiable-credential"})
