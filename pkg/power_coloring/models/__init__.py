# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

from . import point
from . import space
from . import color_code
from . import coloring_table
from . import lazy_coloring
from . import partition
from .point import (
    CoSet,
    FinitePoint,
    Relation,
    TailPoint,
    almost_equal,
    almost_totally_different,
    constant,
    delta,
    relation_on,
    restrict,
    totally_different,
)
from .space import SpaceSig, dec, enc
from .color_code import ColorCode
from .coloring_table import ColoringTable, color_classes, load, save
from .lazy_coloring import LazyColoring
from .partition import PartitionSpec, Piece
