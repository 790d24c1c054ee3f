#! /usr/bin/env python

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import os

from setuptools import setup, find_packages

from pybei.graph import __version__

NAME = 'pybei'
REQUIRES = []
EXTRAS_REQUIRE = {
    'progress': ['tqdm'],
    'oracle': ['networkx'],
}
DESCRIPTION = ('pybei decides unmixedness, accessibility, strong '
               'unmixedness and Cohen-Macaulayness of binomial edge ideals '
               'from the combinatorics of graphs.')

BASE_PATH = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(BASE_PATH, 'README.md')) as f:
    LONG_DESCRIPTION = f.read()


CLASSIFIERS = [
    'Development Status :: 4 - Beta',
    'Environment :: Console',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: Apache Software License',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Programming Language :: Python :: 3.6',
    'Programming Language :: Python :: 3.7',
    'Operating System :: POSIX',
    'Operating System :: MacOS',
    'Operating System :: Microsoft :: Windows',
    'Topic :: Scientific/Engineering :: Mathematics',
]

KEYWORDS = ("binomial edge ideal graph cut set unmixed accessible "
            "cohen-macaulay combinatorics commutative algebra").split(' ')

params = dict(
    name=NAME,
    entry_points={
        'console_scripts': ['pybei = pybei.cli:main'],
        'pytest11': ['pytest_bei = pybei.pytest_plugin'],
    },
    version=__version__,
    install_requires=REQUIRES,
    extras_require=EXTRAS_REQUIRE,
    python_requires='>=3.6',

    description=DESCRIPTION,
    long_description=LONG_DESCRIPTION,
    long_description_content_type='text/markdown',
    keywords=KEYWORDS,
    classifiers=CLASSIFIERS,
    packages=find_packages(exclude=['docs'])
)

setup(**params)
