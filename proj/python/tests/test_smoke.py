# Copyright 2026 The aobs Authors
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

import math
import os
import pathlib

import pytest

import aobs

SCENARIOS = pathlib.Path(
    os.environ.get("AOBS_SCENARIO_DIR", pathlib.Path(__file__).resolve().parents[2] / "scenarios")
)

HEAD_ON = """
version: 1
name: head_on
horizon: 10
t_max: 20
robot: {position: [0, 0], velocity: [1, 0], radius: 0.5, goal: [10, 0], goal_radius: 0.5}
obstacles:
  - id: disk
    radius: 0.5
    trajectory: {type: constant_velocity, position: [5, 0], velocity: [0, 0]}
"""


def static_disk(center=(5.0, 0.0), radius=1.0):
    return aobs.Obstacle("disk", radius, aobs.ConstantVelocity(center, (0.0, 0.0)))


def test_vec2_accepts_tuples():
    v = aobs.Vec2(3.0, 4.0)
    assert aobs.norm(v) == pytest.approx(5.0)
    assert tuple(aobs.rotate((1.0, 0.0), math.pi / 2)) == pytest.approx((0.0, 1.0))
    assert tuple(v + (1.0, 1.0)) == (4.0, 5.0)


def test_head_on_grazing_acceleration():
    result = aobs.grazing_acceleration((5.0, 0.0), 1.0, (1.0, 0.0), math.pi)
    assert result.status == aobs.GrazeStatus.OK
    assert tuple(result.sample.acceleration) == pytest.approx((-0.125, 0.0))
    assert result.sample.time_to_graze == pytest.approx(8.0)


def test_ao_boundary_samples_graze_the_disk():
    boundary = aobs.ao_boundary((0.0, 0.0), (1.0, 0.0), static_disk(), 0.0)
    samples = [s for s in boundary.right.samples if not s.spurious]
    assert samples
    s = samples[len(samples) // 2]
    p = aobs.min_separation((0.0, 0.0), (1.0, 0.0), s.acceleration, static_disk(), 0.0,
                            2.0 * s.time_to_graze)
    assert abs(p.min_separation) < 1e-6


def test_nao_sample_grazes_at_its_time():
    disk = aobs.Obstacle("d", 1.0, aobs.ConstantVelocity((5.0, 0.0), (0.0, 0.5)))
    sample = aobs.nao_sample((0.0, 0.0), (1.0, 0.0), disk, 0.0, 4.0)
    assert sample.feasible
    for a in (sample.acceleration_left, sample.acceleration_right):
        motion = aobs.RobotMotion((0.0, 0.0), (1.0, 0.0), a)
        assert aobs.signed_separation(motion, disk, 4.0) == pytest.approx(0.0, abs=1e-9)


def test_select_acceleration_avoids_head_on_disk():
    config = aobs.PlannerConfig()
    config.goal = aobs.Vec2(10.0, 0.0)
    config.horizon = 10.0
    decision = aobs.select_acceleration((0.0, 0.0), (1.0, 0.0), [static_disk()], 0.0, config)
    assert decision.admissible
    motion = aobs.RobotMotion((0.0, 0.0), (1.0, 0.0), decision.acceleration)
    assert aobs.stays_clear(motion, static_disk(), 10.0)


def test_scenario_round_trip_and_run():
    scenario = aobs.parse_scenario(HEAD_ON)
    assert aobs.parse_scenario(aobs.print_scenario(scenario)) == scenario
    log = aobs.run(scenario, scenario.planner_config(), aobs.RunOptions(dt=0.02))
    assert not log.collisions
    assert log.metrics.completion
    assert log.states_csv().startswith("t,x,y,vx,vy,ax,ay\n")


def test_invalid_scenario_raises():
    with pytest.raises(aobs.ScenarioError):
        aobs.parse_scenario(HEAD_ON.replace("radius: 0.5\n    trajectory", "radius: 0\n    trajectory"))
    with pytest.raises(ValueError):
        aobs.parse_scenario("version: 7\n")


def test_shipped_roundabout_loads():
    scenario = aobs.load_scenario(str(SCENARIOS / "roundabout.yaml"))
    assert len(scenario.obstacle_models()) == 30


def test_render_svg_views():
    boundary = aobs.ao_boundary((0.0, 0.0), (1.0, 0.0), static_disk((5.0, 0.0), 0.5), 0.0)
    svg = aobs.render_svg(aobs.AccelerationMapView(ao_boundaries=[boundary],
                                                   box=aobs.AccelBox(-1, 1, -1, 1)))
    assert svg.startswith("<svg") and svg.count("<path ") == 2
    scenario = aobs.parse_scenario(HEAD_ON)
    log = aobs.run(scenario, scenario.planner_config())
    svg = aobs.render_svg(aobs.WorkspaceView(log, scenario.robot.goal, 0.5))
    assert 'class="robot-path"' in svg


def test_membership_grid_marks_braking_region():
    grid = aobs.membership_grid((0.0, 0.0), (1.0, 0.0), [static_disk()], 0.0, 10.0,
                                aobs.AccelBox(-1, 1, -1, 1), 20)
    assert grid.resolution == 20
    assert 0 < grid.colliding_count < 400
    assert len(grid.to_rows()) == 20


def test_property_suite_runs():
    reports = aobs.run_all(1, 5)
    assert reports
    names = [r.name for r in reports]
    assert names == sorted(names)
