#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright (c) 2026 by the fiberfull authors
#
#    This file is part of fiberfull.
#
#    fiberfull is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    fiberfull is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    long with fiberfull. If not, see <http://www.gnu.org/licenses/>.

"""
commalg is the computer algebra library behind fiberfull. It computes
Groebner bases and free resolutions of graded modules, Hilbert functions
of local cohomology through graded local duality and decides
fiber-fullness of modules over the parameter line k[t].
"""

from .errors import *
from .polyutils import *
from .groebner import (SubmodulePresentation, GroebnerBasis, buchberger,
    normal_form, division, initial_module, syzygies, syzygies_of, colon,
    quotient_ideal, saturate, saturate_parameter, contract_to_parameter,
    is_squarefree, weight_vector_for, homogenize_omega, specialize)
from .resolution import (Resolution, BettiTable, free_resolution,
    minimization, betti_table, depth_and_regularity, extremal_betti)
from .duality import (GradedModulePresentation, HilbertTable,
    default_window, hilbert_function, ext_modules, ext_hilbert,
    local_cohomology_hilbert, local_cohomology_tables,
    stanley_reisner_faces, link, reduced_cohomology_dimension,
    hochster_hilbert)
from .fibers import (TorsionCertificate, FiberFullReport,
    DegenerationReport, parameter_torsion, fiber_full_check,
    fiber_full_locus, resolve_fiber_points, fiber_hilbert_compare,
    cv_verify, GENERIC, RANDOM)
from .parseutils import (ProblemSpec, ProblemParser, ProblemImporter,
    parse_input)
