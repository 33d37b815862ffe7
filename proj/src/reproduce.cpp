#include "pdmdirac/reproduce.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pdmdirac/errors.hpp"
#include "pdmdirac/table_fixture.hpp"

namespace pdmdirac::reproduce {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct FixtureBlock {
    std::string label;
    int kappa = 0;
    int n = 0;
    std::vector<double> values; // row-major as printed
};

struct SuspectEntry {
    int table = 0;
    std::string label;
    double m1 = 0.0;
    double tensor = 0.0;
    double printed = 0.0;
    double verified = 0.0;
};

struct Fixture {
    std::map<int, std::vector<FixtureBlock>> tables;
    std::vector<SuspectEntry> suspects;
};

Fixture parse_fixture(const char* text) {
    Fixture fx;
    std::istringstream in(text);
    std::string line;
    int table = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "table") {
            ls >> table;
            fx.tables[table];
        } else if (tok == "state") {
            FixtureBlock block;
            std::string key;
            ls >> block.label;
            while (ls >> key) {
                if (key == "kappa") ls >> block.kappa;
                else if (key == "n") ls >> block.n;
            }
            fx.tables.at(table).push_back(block);
        } else if (tok == "suspect") {
            SuspectEntry s;
            std::string key;
            ls >> key >> s.table >> key >> s.label;
            while (ls >> key) {
                if (key == "m1") ls >> s.m1;
                else if (key == "T") ls >> s.tensor;
                else if (key == "printed") ls >> s.printed;
                else if (key == "verified") ls >> s.verified;
            }
            fx.suspects.push_back(s);
        } else {
            auto& blocks = fx.tables.at(table);
            if (blocks.empty()) throw std::runtime_error("table fixture: values before any state line");
            blocks.back().values.push_back(std::stod(tok));
            double v;
            while (ls >> v) blocks.back().values.push_back(v);
        }
    }
    return fx;
}

const Fixture& fixture() {
    static const Fixture fx = parse_fixture(kPaperTablesFixture);
    return fx;
}

} // namespace

TableLayout table_layout(TableId id) {
    TableLayout layout;
    if (id == TableId::T1 || id == TableId::T2) {
        layout.m1_values = {0.0, 0.2, 0.4, 0.5};
        layout.tensor_values = {0.0, 1.0, 2.0, 5.0};
        layout.c_ps_values = {-1.0};
    } else {
        layout.m1_values = {0.0, 0.5};
        layout.tensor_values = {0.0, 5.0};
        layout.c_ps_values = {-1.00, -1.25, -1.50, -1.75, -2.00, -2.25, -2.50, -2.75};
    }
    return layout;
}

TableResult reproduce_table(TableId id) {
    const auto& fx = fixture();
    const auto& blocks = fx.tables.at(static_cast<int>(id));
    const TableLayout layout = table_layout(id);

    TableResult result;
    result.id = id;

    for (const auto& block : blocks) {
        auto emit = [&](double m1, double tensor, double c_ps, double paper_value) {
            TableCell cell;
            cell.row_label = block.label;
            cell.kappa = block.kappa;
            cell.n = block.n;
            cell.m1 = m1;
            cell.tensor = tensor;
            cell.c_ps = c_ps;
            cell.paper_value = paper_value;

            for (const auto& s : fx.suspects) {
                if (s.table == static_cast<int>(id) && s.label == block.label &&
                    s.m1 == m1 && s.tensor == tensor) {
                    cell.suspect = true;
                    cell.verified_value = s.verified;
                }
            }

            ModelParams params;
            params.m0 = 5.0;
            params.q = 1.0;
            params.hbar_c = 1.0;
            params.b = b_from_m1(m1, params.hbar_c);
            params.tensor = tensor;
            params.c_sym = c_ps;
            try {
                const EnergyLevel level = solve_energy_pspin(params, block.n, block.kappa);
                cell.energy = level.energy;
                cell.bound = level.diagnostics.is_bound();
            } catch (const NoRealSolution&) {
                cell.energy = kNaN;
            } catch (const NoBoundState&) {
                cell.energy = kNaN;
            }

            const double reference = cell.suspect ? cell.verified_value : cell.paper_value;
            if (!cell.bound || !(std::abs(cell.energy - reference) <= result.tolerance))
                result.mismatches.push_back(result.cells.size());
            result.cells.push_back(cell);
        };

        std::size_t idx = 0;
        auto next_value = [&]() {
            if (idx >= block.values.size())
                throw std::runtime_error("table fixture: too few values for state " + block.label);
            return block.values[idx++];
        };

        if (id == TableId::T3) {
            // rows: C_ps; columns: (m1, T) = (0,0), (0.5,0), (0,5), (0.5,5)
            for (double c_ps : layout.c_ps_values)
                for (double tensor : layout.tensor_values)
                    for (double m1 : layout.m1_values)
                        emit(m1, tensor, c_ps, next_value());
        } else {
            for (double m1 : layout.m1_values)
                for (double tensor : layout.tensor_values)
                    emit(m1, tensor, layout.c_ps_values.front(), next_value());
        }
        if (idx != block.values.size())
            throw std::runtime_error("table fixture: too many values for state " + block.label);
    }
    return result;
}

namespace {

std::optional<EnergyLevel> try_solve(const ModelParams& params, int n, int kappa, Symmetry symmetry) {
    try {
        EnergyLevel level = symmetry == Symmetry::Spin ? solve_energy_spin(params, n, kappa)
                                                       : solve_energy_pspin(params, n, kappa);
        if (!level.diagnostics.is_bound()) return std::nullopt;
        return level;
    } catch (const NoRealSolution&) {
        return std::nullopt;
    } catch (const NoBoundState&) {
        return std::nullopt;
    }
}

} // namespace

DoubletSplitting doublet_splitting(const ModelParams& params, int n, int kappa, Symmetry symmetry) {
    DoubletSplitting out;
    out.kappa_a = kappa;
    out.kappa_b = doublet_partner(kappa, symmetry);
    if (out.kappa_b == 0)
        throw std::invalid_argument("doublet_splitting: state has no doublet partner (kappa' = 0)");
    out.a = try_solve(params, n, kappa, symmetry);
    out.b = try_solve(params, n, out.kappa_b, symmetry);
    if (out.a && out.b) out.split = out.b->energy - out.a->energy;
    return out;
}

std::vector<SweepPoint> sweep(const ModelParams& params, const StateLabel& state,
                              SweepParameter parameter, double from, double to, int steps) {
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    std::vector<SweepPoint> points;
    points.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        SweepPoint p;
        p.value = from + (to - from) * i / (steps - 1);
        ModelParams local = params;
        switch (parameter) {
            case SweepParameter::MassPerturbation: local.b = p.value; break;
            case SweepParameter::Tensor: local.tensor = p.value; break;
            case SweepParameter::SymmetryConstant: local.c_sym = p.value; break;
        }
        if (auto level = try_solve(local, state.n, state.kappa, state.symmetry))
            p.energy = level->energy;
        points.push_back(p);
    }
    return points;
}

} // namespace pdmdirac::reproduce
