"""c-differential uniformity of functions over GF(p^n)."""
from .gf import (AES_MODULUS, GF, DegenerateInputError, DomainError, FieldElement,
                 FieldMismatchError, FieldSpec, default_modulus, is_irreducible)
from .fpoly import (LinearizedPoly, UniPoly, algebraic_degree, eval_linearized, eval_poly,
                    interpolate_table, linearized_support, tabulate)
from .cdiff import (CDDT, Classification, CduReport, FunctionTable, cddt_entry, cddt_table,
                    cdu, cdu_spectrum, classify, du, inverse_plus_frobenius, max_cdu,
                    perturb_scan_monomials)
from .charsums import (CharacterContext, gauss_sum, linearized_bounds, verify_weil_identity,
                       weil_report, weil_sum_do)
from .sboxcorpus import SboxFormatError, SboxRecord, builtin_corpus, load_sbox, sbox_report

__version__ = "0.1.0"
