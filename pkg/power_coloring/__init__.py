# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

from . import tools
from . import models
from . import analysis
from . import construct
from . import wizard
