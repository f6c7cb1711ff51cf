# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

from . import common
from . import test_pairing
from . import test_point
from . import test_coloring_table
from . import test_properness
from . import test_tightness
from . import test_uniformity
from . import test_classification
from . import test_oracle
from . import test_construct
from . import test_composite
from . import test_partition
from . import test_sampling
from . import test_parsers
from . import test_commands
