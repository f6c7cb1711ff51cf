# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

from .config import config
from .pairing import fold, pair, unfold, unpair
