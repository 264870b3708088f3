# Copyright 2026 The twinvest Authors. All Rights Reserved.
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
# ==============================================================================

"""Python bindings for the twinvest solvers."""

from ._core import (  # noqa: F401
    AgentKind,
    Contract,
    ContinuousEffortModel,
    DomainError,
    FamilyKind,
    Model,
    ParametricFamily,
    ParseError,
    Regime,
    agent_rent,
    classify_regime,
    contract_for_effort,
    degradation_deterrent_check,
    displacement_deterrent_check,
    displacement_margin,
    foc_residual,
    load_model,
    optimal_contract,
    optimal_investment,
    principal_optimal_effort,
    principal_surplus,
    rehire_cycle_length,
    run_cli,
    simulate_cycles,
    simulate_two_period,
    validate,
    validate_continuous,
)


def load_model_file(path):
    """Read a JSON model file and return (model, continuous_model)."""
    with open(path, encoding="utf-8") as handle:
        return load_model(handle.read())
