# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Package metadata is read from power_coloring/__manifest__.py."""

import ast
import os

import setuptools

HERE = os.path.dirname(os.path.abspath(__file__))

with open(os.path.join(HERE, "power_coloring", "__manifest__.py")) as manifest_file:
    MANIFEST = ast.literal_eval(manifest_file.read())

with open(os.path.join(HERE, "power_coloring", "README.rst")) as readme_file:
    LONG_DESCRIPTION = readme_file.read()

setuptools.setup(
    name="power-coloring",
    version=MANIFEST["version"],
    description=MANIFEST["summary"],
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/x-rst",
    author=MANIFEST["author"],
    license=MANIFEST["license"],
    packages=setuptools.find_packages(include=["power_coloring", "power_coloring.*"]),
    install_requires=MANIFEST["external_dependencies"]["python"],
    entry_points=MANIFEST["entry_points"],
    python_requires=">=3.8",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: GNU Affero General Public License v3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
