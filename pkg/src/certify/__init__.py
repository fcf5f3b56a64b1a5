"""Duality certificates for squared-weight bipartite matchings.

Components:
- squared_matching_dual: optimal matching and complementary-slack dual
- build_certificate / verify_certificate: per-k certificate of OPT_k <= sqrt(2) w(M_k)
- certify_all: records for every k
"""

from src.certify.dual import MatchingDual, squared_matching_dual
from src.certify.certificate import (
    CertificateCheck,
    DualCertificate,
    build_certificate,
    certify_all,
    verify_certificate,
)

__all__ = [
    "MatchingDual",
    "squared_matching_dual",
    "CertificateCheck",
    "DualCertificate",
    "build_certificate",
    "certify_all",
    "verify_certificate",
]
