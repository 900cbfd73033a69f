from setuptools import setup, find_packages
import os

try:
    long_description = open(
        os.path.join(
            os.path.abspath(os.path.dirname(__file__)),
            'README.rst')).read()
except:
    long_description = 'Please refer to the README.rst in the source tree.'
    print('! could not read README.rst file.')

setup(
    name='pyPBU',
    version='1.0.0',
    description='Process based unification of software quality approaches',
    author='pyPBU Developers',
    long_description=long_description,
    license='MIT',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'Topic :: Software Development',
        'Topic :: Software Development :: Quality Assurance',
        'Topic :: Software Development :: Libraries',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
    ],
    keywords='cmmi ieee1028 inspection process unification traceability',
    packages=find_packages(exclude=['docs', 'tests', 'tests.*']),
    python_requires='>=3.9',
    install_requires=[
        'python-dateutil>=2.6',
        'nltk>=3.4',
    ],
    extras_require={
        'xmlimport': ['defusedxml>=0.5.0'],
        'complete': [
            'defusedxml>=0.5.0',
        ]
    },
    entry_points={
        'console_scripts': [
            'pbu=pbu.cli:main',
        ],
    },
)
