"""lieclass: exact-arithmetic classification toolkit for compact homogeneous
spaces whose rational cohomology is that of a product of two spheres.

The package is organised in layers:

* :mod:`lieclass.cartan` -- static structure data for the nine compact simple
  Lie families (Cartan matrices, roots, exponents, centers, conjugation).
* :mod:`lieclass.reps` -- dominant-weight arithmetic: dimensions, field types,
  kernels, weight multiplicities, bounded enumeration of irreducibles.
* :mod:`lieclass.snf` / :mod:`lieclass.dynkin` -- integer matrix normal forms
  and the Dynkin-index algebra with pi_3 cokernels.
* :mod:`lieclass.homotopy` -- closed-form rational homotopy ranks.
* :mod:`lieclass.classify` -- the exponent-matching search, representation
  feasibility, torsion filtering, and the regression comparator.
* :mod:`lieclass.geometry` -- multiplicity constraints for isoparametric
  hypersurfaces and compact quadrangle parameters.
* :mod:`lieclass.cli` -- the ``lieclass`` command-line frontend.

All arithmetic is exact (integers and :class:`fractions.Fraction`); no
floating point is used anywhere.
"""

__version__ = "0.1.0"
