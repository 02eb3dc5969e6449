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

"""Matroid algorithms under a size-sensitive independence-oracle cost."""

import json

from ._qcmatroid import (
    InfeasibleError,
    Instance,
    ParameterError,
    SizeLimitError,
    UnsupportedError,
    basis,
    bench,
    bf_partition_size,
    bf_rank,
    check_axioms,
    family_names,
    fit_loglog_slope,
    gamma,
    generate,
    partition_size,
    rank,
)


def instance(descriptor):
    """Builds an Instance from a descriptor dict or JSON string."""
    if isinstance(descriptor, dict):
        descriptor = json.dumps(descriptor)
    return Instance.from_json(descriptor)


def descriptor(inst):
    return json.loads(inst.to_json())


__all__ = [
    "InfeasibleError", "Instance", "ParameterError", "SizeLimitError",
    "UnsupportedError", "basis", "bench", "bf_partition_size", "bf_rank",
    "check_axioms", "descriptor", "family_names", "fit_loglog_slope", "gamma",
    "generate", "instance", "partition_size", "rank",
]
