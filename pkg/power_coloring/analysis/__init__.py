# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

from . import verdict
from . import graph
from . import properness
from . import tightness
from . import uniformity
from . import classification
from . import ultrafilter
from . import oracle
from . import sampling
from .verdict import Verdict
from .properness import (
    classes_maximal_lawful,
    is_lawful,
    is_maximal_lawful,
    is_proper,
    lawful_classes,
)
from .tightness import is_c_tight, is_minimal, is_nu_tight, is_tight, mix_closure_check
from .uniformity import (
    is_strongly_uniform,
    is_weakly_uniform,
    range_closure_check,
    weak_uniformity_search,
)
from .classification import (
    ClassificationFailure,
    FactorClassification,
    PrincipalForm,
    classify_2tight,
    extract_principal_form,
)
from .ultrafilter import (
    PrincipalUltrafilter,
    corresponding_ultrafilter,
    satisfies_switch_condition,
)
from .oracle import oracle_enumerate_proper
