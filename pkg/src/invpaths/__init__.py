"""Pattern-avoiding involutions, grand Dyck paths, and exact checks of their q-identities."""

from .bijections import delta, delta_inv, from_grand, to_grand, xi, xi_inv
from .errors import BoundError, DomainError, ParseError
from .genfun import GenFunSpec, brute_force_oracle, genfun
from .identities import IDENTITY_IDS, closed_form
from .paths import parse_path, peaks, primal_factorization, sump, valleys
from .perms import Family, enumerate_family, enumerate_filtered, parse_perm, stats
from .qpoly import LaurentPolynomial, e_spec, q, q_binomial, q_binomial_at_minus_one, q_int
from .rsk import StandardTableau, inverse_rsk, rsk, transpose_involution
from .sign_involutions import Builder, Case, build_fixed, duplicate, phi1, phi2, phi3, phi4
from .verify import VerificationReport, check, check_involution_contracts

__version__ = "0.1.0"
