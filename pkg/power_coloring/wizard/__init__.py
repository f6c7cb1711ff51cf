# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

from . import base_parser
from . import point_parser
from . import document_parser
from . import run_report
