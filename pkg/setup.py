from setuptools import setup, find_packages

version = '1.0'

setup(name='splitcycle',
      version=version,
      description="Split Cycle and other collective choice rules on ranked ballots, with an axiom checker",
      long_description=open("README.md").read(),
      long_description_content_type="text/markdown",
      classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: BSD License",
        "Topic :: Scientific/Engineering :: Mathematics",
      ],
      keywords='voting social-choice condorcet split-cycle',
      license='BSD',
      packages=find_packages(exclude=['ez_setup', 'examples']),
      package_data={'splitcycle': ['templates/*']},
      include_package_data=True,
      zip_safe=False,
      python_requires=">=3.8",
      install_requires=[
        "logbook",
        "werkzeug",
        "jinja2",
        "networkx",
        "numpy",
      ],
      extras_require={
        'tests': ["pytest"],
      },
      entry_points="""
      [console_scripts]
      splitcycle = splitcycle.scripts:main
      """,
      )
