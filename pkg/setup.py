from setuptools import setup

with open('README.rst', 'r') as f:
    readme = f.read()

with open('HISTORY.rst', 'r') as f:
    history = f.read()

setup(
    name='pysdtest',
    version='1.0.0',
    description='One-sided two-sample stochastic dominance tests and their efficiency',
    long_description=readme + '\n\n' + history,
    license='MIT',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    packages=['pysdtest', 'pysdtest.objects'],
    python_requires='>=3.8',
    install_requires=[
        'matplotlib>=3.3',
        'numpy>=1.20',
        'pytz>=2017.2',
        'scipy>=1.7',
        'six>=1.10.0',
    ],
    extras_require={'test': ['pytest>=6.0']},
    entry_points={'console_scripts': ['sdtest=pysdtest.cli:main']},
)
