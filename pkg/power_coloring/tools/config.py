# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

import logging
import os

_logger = logging.getLogger(__name__)

ENV_PREFIX = "POWER_COLORING_"


class ConfigManager(object):
    """Process-wide settings.

    Defaults are declared once in ``_defaults``. Environment variables named
    ``POWER_COLORING_<KEY>`` override them at load time and the command line
    overrides both through ``config[key] = value``.
    """

    _defaults = {
        # search nodes the proper-coloring oracle may visit
        "oracle_budget": 10 ** 8,
        # largest kappa ** lambda accepted for an exhaustive space
        "space_limit": 10 ** 6,
        "sample_count": 10 ** 4,
        "log_level": "WARNING",
    }

    def __init__(self):
        self.options = dict(self._defaults)
        self._parse_env()

    def _parse_env(self):
        for key, default in self._defaults.items():
            raw = os.environ.get(ENV_PREFIX + key.upper())
            if raw is None:
                continue
            if isinstance(default, int):
                try:
                    self.options[key] = int(raw)
                except ValueError:
                    _logger.warning("Ignoring non integer %s%s=%r", ENV_PREFIX, key, raw)
            else:
                self.options[key] = raw

    def __getitem__(self, key):
        return self.options[key]

    def __setitem__(self, key, value):
        if key not in self._defaults:
            raise KeyError(key)
        self.options[key] = value

    def get(self, key, default=None):
        return self.options.get(key, default)

    def reset(self):
        self.options = dict(self._defaults)
        self._parse_env()


config = ConfigManager()
