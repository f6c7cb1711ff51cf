# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

from . import tabulate
from . import trivial
from . import parity
from . import cylinder
from . import recolor
from . import partial
from . import partition
from . import composite
from . import almost_disjoint
from . import minimize
from . import descriptor
from .tabulate import tabulate_coloring, tabulate_with_palette
from .trivial import trivial_coloring
from .parity import parity_coloring, parity_table
from .cylinder import cylinder_extend
from .recolor import recolor
from .partial import extend_partial
from .partition import partition_induced
from .composite import (
    composite_coloring,
    composite_partition,
    dependence_witness,
    in_trace,
    rank_in_trace,
)
from .almost_disjoint import almost_disjoint_family, disagreement
from .minimize import lowered_entries, minimize
from .descriptor import build
