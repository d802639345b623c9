# Copyright 2026 The Authors.
#
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

"""Python bindings for the milnor library.

Report functions take and return plain dictionaries with the same layout as
the milnor-cli JSON output.
"""

import json as _json

from pymilnor import _core
from pymilnor._core import (  # noqa: F401
    Matroid,
    MilnorError,
    characteristic_polynomial,
    circuits,
    complement_count,
    flats,
    milnor_count,
    mobius_number,
    reduced_betti,
    version,
)

__version__ = _core.__version__


def _report(command, document, **options):
    text = getattr(_core, command)(_json.dumps(document), _json.dumps(options))
    return _json.loads(text)


def matroid_info(document, **options):
    return _report("matroid_info", document, **options)


def bergman_betti(document, **options):
    return _report("bergman_betti", document, **options)


def verify_initial(document, **options):
    return _report("verify_initial", document, **options)


def strata(document, **options):
    return _report("strata", document, **options)


def count(document, **options):
    return _report("count", document, **options)


def invariance(document, **options):
    return _report("invariance", document, **options)


def fan_report(document, **options):
    return _report("fan_report", document, **options)
