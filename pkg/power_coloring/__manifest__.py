# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

{
    "name": "Power Coloring",
    "version": "1.0.0",
    "summary": "Proper, tight and uniform colorings of powers of complete graphs",
    "license": "AGPL-3",
    "development_status": "Beta",
    "author": "Power Coloring Contributors",
    "external_dependencies": {"python": ["click", "networkx", "numpy"]},
    "entry_points": {
        "console_scripts": ["power-coloring = power_coloring.wizard.commands:main"]
    },
    "installable": True,
}
