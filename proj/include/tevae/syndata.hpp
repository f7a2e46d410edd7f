#pragma once

#include "tevae/nn.hpp"
#include "tevae/types.hpp"

namespace tevae::syndata {

/// Channel layout of every generated sequence.
extern const std::vector<std::string> kChannelNames;  // 13 channels
constexpr double kRateHz = 2.0;
constexpr double kAmbientC = 25.0;

/// First-order plant constants: enough physics to give the channels real
/// couplings and variable-state behaviour, not a vehicle model.
struct VehicleParams {
    double wheel_radius_m = 0.33;
    double gear_ratio = 9.0;
    double mass_kg = 1800.0;
    double drag_c0 = 160.0, drag_c1 = 2.5, drag_c2 = 0.45;  // N, N/(m/s), N/(m/s)^2
    double battery_capacity_ah = 40.0;
    double nominal_voltage_v = 330.0;   // open-circuit at SoC 0
    double soc_voltage_gain_v = 90.0;   // open-circuit slope over SoC
    double internal_resistance_ohm = 0.12;
    double cable_resistance_ohm = 0.02;
    double drivetrain_efficiency = 0.90;
    double recuperation_efficiency = 0.65;
    double aux_power_w = 0.0;
    double measurement_noise_scale = 1.0;
    // lumped thermal masses [J/K] and cooling conductances [W/K]
    double rotor_heat_capacity = 9000.0, rotor_cooling = 60.0;
    double stator_heat_capacity = 14000.0, stator_cooling = 90.0;
    double inverter_heat_capacity = 4000.0, inverter_cooling = 45.0;
    double battery_heat_capacity = 180000.0, battery_cooling = 250.0;

    void validate() const;
};

struct CycleSegment {
    double target_speed_mps = 0.0;
    double hold_s = 0.0;
};

struct DriveCycleSpec {
    std::string name;
    double duration_s = 300.0;  // 300..1800
    std::vector<CycleSegment> segments;
    double accel_limit_mps2 = 2.2;

    void validate() const;
};

/// The eight bundled cycle classes (short/long/fast/slow/dynamic trips).
const std::vector<DriveCycleSpec>& cycle_classes();

/// Piecewise ramps between segment targets with bounded acceleration plus
/// seeded jitter; repeatable per generator state.
std::vector<double> gen_cycle(const DriveCycleSpec& spec, nn::Rng& rng);

/// Per-sequence initial state, drawn per run for variable-state behaviour.
struct InitState {
    double soc = 0.8;                  // 0..1
    double battery_temp_c = kAmbientC;
    double rotor_temp_c = kAmbientC;
    double stator_temp_c = kAmbientC;
    double inverter_temp_c = kAmbientC;
};

InitState draw_init_state(nn::Rng& rng);

enum class AnomalyType { wheel_diameter, recuperation_off, battery_simulator, cooling_loss };
enum class Onset { start, midpoint };

const char* to_string(AnomalyType t);
AnomalyType anomaly_type_from_string(const std::string& s);

struct AnomalySpec {
    AnomalyType type = AnomalyType::wheel_diameter;
    Onset onset = Onset::start;
    double magnitude = 1.0;

    std::set<Eigen::Index> root_cause_channels() const;
    void validate() const;
};

/// Behaviour switches threaded through the simulation; neutral values leave
/// the run bit-identical to a normal one.
struct SimMods {
    double wheel_display_factor = 1.0;  // scales the reported vehicle speed
    double recup_level = 1.0;           // 0 clamps braking torque at zero
    double battery_blend = 0.0;         // 1 = fully flat, stiff source instead of the pack
    double cooling_factor = 1.0;        // scales the shared cooling loop
    Eigen::Index cooling_onset_step = 0;
};

Sequence simulate(const std::vector<double>& speed_profile, const VehicleParams& vp,
                  const InitState& init, nn::Rng& rng, const SimMods& mods = {});

struct InjectResult {
    Sequence seq;
    GroundTruth gt;
};

/// Run the simulation with the anomaly's switches applied and build the
/// matching ground truth (start onset: whole-series anomaly; midpoint:
/// sub-sequence anomaly starting at T/2).
InjectResult inject(const std::vector<double>& speed_profile, const VehicleParams& vp,
                    const InitState& init, std::uint64_t sim_seed, const AnomalySpec& spec);

struct DatasetConfig {
    std::string out_dir;
    int train_sequences = 200;     // unlabelled pool, split 80/20 downstream
    double val_fraction = 0.2;
    int test_normals = 476;
    int anomaly_rounds = 1;        // injections per type per cycle class
    double budget_fraction = 1.0;  // relative training-pool size (1h/8h/64h analogue)
    std::uint64_t seed = 1234;
    VehicleParams vehicle;
    // magnitude rotation across cycle classes, per anomaly type
    std::vector<double> wheel_magnitudes = {1.5, 1.35, 1.45, 1.3};
    std::vector<double> cooling_magnitudes = {0.12, 0.2, 0.15, 0.25};
    std::vector<double> battery_magnitudes = {1.0, 0.7, 0.85, 0.55};
};

struct DatasetSummary {
    int train = 0, val = 0, test_normal = 0, test_anomalous = 0;
};

/// Generate and write train/val/test splits in the on-disk dataset layout.
DatasetSummary build_dataset(const DatasetConfig& cfg);

}  // namespace tevae::syndata
