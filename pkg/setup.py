import os
from pathlib import Path
from setuptools import setup, find_packages


LONG_DESCRIPTION_SRC = 'README.rst'

def read(file):
    with open(os.path.abspath(file), 'r', encoding='utf-8') as f:
        return f.read()


# Parse version
init = Path(__file__).parent.joinpath("symcayley", "__init__.py")
for line in init.read_text().split("\n"):
    if line.startswith("__version__ ="):
        break
version = line.split(" = ")[-1].strip('"')

setup(
    name='symcayley',
    packages=find_packages(exclude=("tests", "tests.*")),
    version=version,
    license='MIT',
    description='Exact spectra, energy and nullity of normal Cayley graphs on symmetric groups',
    long_description=read(LONG_DESCRIPTION_SRC),
    long_description_content_type="text/x-rst; charset=UTF-8",
    keywords=["cayley-graph", "symmetric-group", "character-table", "murnaghan-nakayama", "graph-energy", "spectral-graph-theory"],
    python_requires=">=3.8",
    install_requires=["python-dotenv", "numpy"],
    extras_require={"test": ["hypothesis"]},
    entry_points={"console_scripts": ["symcayley=symcayley.cli:main"]},
)
