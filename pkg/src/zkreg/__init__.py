"""Credential-gated device registration with zero-knowledge registration proofs.

Issuers attest device attributes as signed claims; device owners prove
registration conditions over those claims in zero knowledge; a simulated
chain contract verifies the proofs and maintains the device registry that
gates data provisioning.
"""

__version__ = "0.1.0"
