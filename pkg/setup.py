from codecs import (
    open,
)
from os import (
    path,
)

from setuptools import (
    find_packages,
    setup,
)


here = path.abspath(path.dirname(__file__))

__version__ = '0.2.0'

# Get the long description from the README file
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

with open(path.join(here, 'CHANGES.md'), encoding='utf-8') as f:
    long_description += f.read()

# get the dependencies and installs
with open(path.join(here, 'requirements.txt'), encoding='utf-8') as f:
    all_reqs = f.read().split('\n')

install_requires = [
    x.strip()
    for x in all_reqs if
    x.strip() and 'git+' not in x
]
dependency_links = [
    x.strip().replace('git+', '')
    for x in all_reqs if
    x.startswith('git+')
]

excluded_packages = (
    'docs',
    'tests',
    'tests.*',
)

setup(
    name='ranked-packing',
    version=__version__,
    description='RU-DU resource allocation as 2D strip packing solved by ranked-reward self-play',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='MIT',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
    ],
    keywords='strip packing, mcts, self-play, oran',
    packages=find_packages(exclude=excluded_packages),
    package_data={
        'ranked_packing': ['presets/*.json'],
    },
    include_package_data=True,
    python_requires='>=3.8',
    install_requires=install_requires,
    dependency_links=dependency_links,
    entry_points={
        'console_scripts': [
            'ranked-packing=ranked_packing.__main__:main',
        ],
    },
)
