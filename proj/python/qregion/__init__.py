# Copyright 2026 The qregion developers

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Conic inner/outer approximations of quantum testing regions.

Thin python layer over the compiled ``_core`` module: ellipsoid and
elliptical d-cone approximations of measurement and state-family images,
membership/support queries, preimage reconstruction, hull containment
certificates, and Monte Carlo verification.
"""

from qregion._core import *  # noqa: F401,F403
from qregion._core import __version__  # noqa: F401
