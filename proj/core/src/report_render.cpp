#include "qcorr/report_render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcorr/tolerances.hpp"

namespace qcorr {

namespace {

using nlohmann::json;

std::string fixed6(double value) {
    if (std::abs(value) < 5e-7) {
        value = 0.0;  // avoid "-0.000000"
    }
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return buffer;
}

std::string fixed6(const std::optional<double> &value) {
    return value ? fixed6(*value) : "UNDEFINED";
}

std::string prob_vector(const std::vector<double> &p) {
    std::string out = "(";
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k > 0) {
            out += ", ";
        }
        out += fixed6(p[k]);
    }
    return out + ")";
}

const char *order_name(MeasurementOrder order) {
    return order == MeasurementOrder::AFirst ? "a-first" : "b-first";
}

void render_conditional(std::ostringstream &out, const char *title, const ConditionalTable &table,
                        char conditioning_symbol) {
    out << title << ":\n";
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        out << "  " << conditioning_symbol << "_" << k << ": ";
        if (table.rows[k]) {
            out << prob_vector(*table.rows[k]);
        } else {
            out << "UNDEFINED";
        }
        out << "\n";
    }
}

// The support of each defined conditional row, drawn as one arrow per
// reachable outcome.
void render_arrows(std::ostringstream &out, const ConditionalTable &table, char from_symbol,
                   char to_symbol) {
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        if (!table.rows[k]) {
            continue;
        }
        for (std::size_t l = 0; l < table.rows[k]->size(); ++l) {
            if ((*table.rows[k])[l] > kProbFloor) {
                out << "  " << from_symbol << "_" << k << " -> " << to_symbol << "_" << l << "\n";
            }
        }
    }
}

std::string render_text(const StateSpec &spec, MeasurementOrder order,
                        const JointDistribution &joint, const ConditionalTable &b_given_a,
                        const ConditionalTable &a_given_b, const CorrelationReport &r) {
    std::ostringstream out;
    out << "bipartite state: dimA = " << spec.state.dim_a() << ", dimB = " << spec.state.dim_b()
        << "\n";
    out << "measurement order: " << order_name(order) << "\n\n";

    out << "p^A = " << prob_vector(joint.p_a()) << "\n";
    out << "p^B = " << prob_vector(joint.p_b()) << "\n\n";

    out << "p^AB:\n";
    for (std::size_t i = 0; i < joint.n_a(); ++i) {
        std::vector<double> row(joint.n_b());
        for (std::size_t j = 0; j < joint.n_b(); ++j) {
            row[j] = joint.joint(i, j);
        }
        out << "  " << prob_vector(row) << "\n";
    }
    out << "\n";

    render_conditional(out, "p^{B|A}", b_given_a, 'a');
    out << "\n";
    render_conditional(out, "p^{A|B}", a_given_b, 'b');
    out << "\n";

    out << "H(A) = " << fixed6(r.h_a) << "\n";
    out << "H(B) = " << fixed6(r.h_b) << "\n";
    out << "H(B|A) = " << fixed6(r.h_b_given_a) << "\n";
    out << "H(A|B) = " << fixed6(r.h_a_given_b) << "\n";
    out << "I(A:B) = " << fixed6(r.mi_classical) << "\n";
    out << "S(A) = " << fixed6(r.s_a) << "\n";
    out << "S(B) = " << fixed6(r.s_b) << "\n";
    out << "S(AB) = " << fixed6(r.s_ab) << "\n";
    out << "I(rho) = " << fixed6(r.mi_quantum) << "\n";
    out << "I/H(A) = " << fixed6(r.ratio_a) << "\n";
    out << "I/H(B) = " << fixed6(r.ratio_b) << "\n";
    out << "C(A,B) = " << fixed6(r.c_measure) << "\n";
    out << "T(rho) = " << fixed6(r.t_measure)
        << (non_classical_regime(r) ? " [non-classical regime]" : "") << "\n\n";

    out << "dependence A -> B:\n";
    render_arrows(out, b_given_a, 'a', 'b');
    out << "B = f(A): " << (r.functional_b_of_a ? "yes" : "no") << "\n\n";

    out << "dependence B -> A:\n";
    render_arrows(out, a_given_b, 'b', 'a');
    out << "A = f(B): " << (r.functional_a_of_b ? "yes" : "no") << "\n";
    return out.str();
}

json optional_field(const std::optional<double> &value) {
    return value ? json(*value) : json(nullptr);
}

std::string render_json(const StateSpec &spec, MeasurementOrder order,
                        const JointDistribution &joint, const ConditionalTable &b_given_a,
                        const ConditionalTable &a_given_b, const CorrelationReport &r) {
    json doc;
    doc["dims"] = {spec.state.dim_a(), spec.state.dim_b()};
    doc["order"] = order_name(order);

    doc["p_a"] = joint.p_a();
    doc["p_b"] = joint.p_b();
    json rows = json::array();
    for (std::size_t i = 0; i < joint.n_a(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < joint.n_b(); ++j) {
            row.push_back(joint.joint(i, j));
        }
        rows.push_back(std::move(row));
    }
    doc["p_joint"] = std::move(rows);

    const auto conditional_json = [](const ConditionalTable &table) {
        json entries = json::array();
        for (const auto &row : table.rows) {
            entries.push_back(row ? json(*row) : json(nullptr));
        }
        return entries;
    };
    doc["conditional_b_given_a"] = conditional_json(b_given_a);
    doc["conditional_a_given_b"] = conditional_json(a_given_b);

    json report;
    report["h_a"] = r.h_a;
    report["h_b"] = r.h_b;
    report["h_b_given_a"] = r.h_b_given_a;
    report["h_a_given_b"] = r.h_a_given_b;
    report["mi_classical"] = r.mi_classical;
    report["s_a"] = r.s_a;
    report["s_b"] = r.s_b;
    report["s_ab"] = r.s_ab;
    report["mi_quantum"] = r.mi_quantum;
    report["ratio_a"] = optional_field(r.ratio_a);
    report["ratio_b"] = optional_field(r.ratio_b);
    report["c_measure"] = optional_field(r.c_measure);
    report["t_measure"] = optional_field(r.t_measure);
    report["functional_b_of_a"] = r.functional_b_of_a;
    report["functional_a_of_b"] = r.functional_a_of_b;
    report["non_classical_regime"] = non_classical_regime(r);
    doc["report"] = std::move(report);

    return doc.dump(2) + "\n";
}

}  // namespace

std::string run_report(const StateSpec &spec, ReportFormat format, MeasurementOrder order) {
    const JointDistribution joint =
        joint_distribution(spec.state, spec.basis_a, spec.basis_b, order);
    const ConditionalTable b_given_a = conditional_table(joint, Direction::BGivenA);
    const ConditionalTable a_given_b = conditional_table(joint, Direction::AGivenB);
    const CorrelationReport report = build_report(spec.state, spec.basis_a, spec.basis_b);

    if (format == ReportFormat::Text) {
        return render_text(spec, order, joint, b_given_a, a_given_b, report);
    }
    return render_json(spec, order, joint, b_given_a, a_given_b, report);
}

}  // namespace qcorr
