"""Exact holonomic functions, functional Pell solutions and integer-definability witnesses."""

from .config import Defaults, defaults
from .denef import DenefWitness, denef_witness, eval_at_one_divide, transcript, witness_verify
from .errors import (
    HolonomicaError,
    InternalConsistencyError,
    NotASolution,
    NotDivisible,
    ParseError,
    PreconditionError,
    TruncationTooShort,
    Undetermined,
)
from .exact import GaussRat, PhaseLaurent
from .holonomic import (
    DModule,
    OdeAnnihilator,
    Recurrence,
    annihilator_add,
    annihilator_mul,
    dmodule_annihilator,
    ode_series_check,
    ode_to_recurrence,
    polynomial_annihilator,
    recurrence_to_ode,
    recurrence_unroll,
)
from .lacunary import SupportProfile, gap_count, lacunarity_evidence, polynomiality_certificate, support_combine
from .pell import (
    EntirePellData,
    PellWitness,
    pell_classify,
    pell_general_solution,
    pell_generate,
    pell_holonomic_witness,
    pell_verify_poly,
)
from .poly import Poly, parse_poly
from .quad import QuadElem
from .ratfunc import RatFunc
from .series import TruncSeries, series_exp, series_W

__version__ = "0.1.0"
