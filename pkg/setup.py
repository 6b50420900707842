#!/usr/bin/env python
# -*- coding: utf-8 -*-
from setuptools import setup
import re

# load version form _version.py
VERSIONFILE = "SINRsched/_version.py"
verstrline = open(VERSIONFILE, "rt").read()
VSRE = r"^__version__ = ['\"]([^'\"]*)['\"]"
mo = re.search(VSRE, verstrline, re.M)
if mo:
    verstr = mo.group(1)
else:
    raise RuntimeError("Unable to find version string in %s." % (VERSIONFILE,))

setup(name='SINRsched',
      version=verstr,
      description=("Wireless link scheduling in the SINR model with the mean power assignment"),
      license="Apache License 2.0",
      keywords="wireless scheduling sinr interference power-control graph-coloring",
      include_package_data=True,
      packages=["SINRsched"],
      package_dir={'SINRsched': 'SINRsched'},
      package_data={'SINRsched': ['sinrschedrc']},
      test_suite='testing',
      python_requires='>=3.7',
      install_requires=['numpy>=1.17', 'scipy>=1.0', 'networkx>=2.4'],
      entry_points={'console_scripts': ['sinrsched=SINRsched.cli:main']},
      classifiers=['License :: OSI Approved :: Apache Software License',
                   'Natural Language :: English',
                   'Operating System :: MacOS :: MacOS X',
                   'Operating System :: Microsoft :: Windows',
                   'Operating System :: POSIX :: Linux',
                   'Programming Language :: Python :: 3',
                   'Topic :: Scientific/Engineering']
      )
