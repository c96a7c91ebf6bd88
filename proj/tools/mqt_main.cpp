// Command-line frontend. Every experiment is a subcommand with deterministic
// text or JSON output; all functionality is reached through the C API in
// mqt/mqt.h. Exit codes: 0 success / verdict holds, 1 verdict fails,
// 2 usage error, 3 enumeration bound exceeded.

#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <mqt/mqt.h>

namespace {

int fail(mqt_status status) {
    std::fprintf(stderr, "error: %s\n", mqt_last_error());
    return status == MQT_ERR_BOUND ? 3 : 2;
}

// Prints the report in the requested format and turns its verdict into the
// process exit code.
int emit(mqt_report* report, const std::string& format) {
    std::fputs(format == "json" ? mqt_report_json(report) : mqt_report_text(report), stdout);
    int code = mqt_report_verdict(report) ? 0 : 1;
    mqt_report_free(report);
    return code;
}

struct FieldHandle {
    mqt_field* ptr = nullptr;
    ~FieldHandle() { mqt_field_free(ptr); }
};
struct StateHandle {
    mqt_state* ptr = nullptr;
    ~StateHandle() { mqt_state_free(ptr); }
};
struct MatrixHandle {
    mqt_matrix* ptr = nullptr;
    ~MatrixHandle() { mqt_matrix_free(ptr); }
};
struct BasisHandle {
    mqt_basis* ptr = nullptr;
    ~BasisHandle() { mqt_basis_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for modal quantum theory over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string field_spec = "GF(2)";
    std::string format = "text";
    bool projective = false;
    uint64_t bound = 1000000;
    app.add_option("--field", field_spec, "field spec, e.g. GF(2), GF(4), GF(3^2);poly=[2,2,1]")
        ->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--projective", projective,
                 "treat states as rays (one representative per scalar class)");
    app.add_option("--bound", bound, "enumeration bound for exhaustive sweeps")
        ->capture_default_str();

    int rc = 0;

    auto* cmd_field_info = app.add_subcommand(
        "field-info", "element list, operation tables (order <= 16) and axiom summary");
    cmd_field_info->callback([&] {
        FieldHandle f;
        if (mqt_status s = mqt_field_parse(field_spec.c_str(), &f.ptr); s != MQT_OK) {
            rc = fail(s);
            return;
        }
        mqt_report* report = nullptr;
        if (mqt_status s = mqt_run_field_info(f.ptr, &report); s != MQT_OK) {
            rc = fail(s);
            return;
        }
        rc = emit(report, format);
    });

    uint32_t census_d1 = 2, census_d2 = 2;
    auto* cmd_census = app.add_subcommand(
        "census", "count total/product/entangled state vectors of a bipartite system");
    cmd_census->add_option("d1", census_d1, "first factor dimension")->required();
    cmd_census->add_option("d2", census_d2, "second factor dimension")->required();
    cmd_census->callback([&] {
        FieldHandle f;
        if (mqt_status s = mqt_field_parse(field_spec.c_str(), &f.ptr); s != MQT_OK) {
            rc = fail(s);
            return;
        }
        mqt_report* report = nullptr;
        if (mqt_status s = mqt_run_census(f.ptr, census_d1, census_d2, projective ? 1 : 0, bound,
                                          &report);
            s != MQT_OK) {
            rc = fail(s);
            return;
        }
        rc = emit(report, format);
    });

    std::string possible_state, possible_basis;
    auto* cmd_possible =
        app.add_subcommand("possible", "possibility set of a state under a measurement");
    cmd_possible->add_option("state", possible_state, "state reference or inline JSON")
        ->required();
    cmd_possible->add_option("measurement", possible_basis, "measurement reference or inline JSON")
        ->required();
    cmd_possible->callback([&] {
        StateHandle s;
        BasisHandle b;
        if (mqt_status st = mqt_state_parse(possible_state.c_str(), &s.ptr); st != MQT_OK) {
            rc = fail(st);
            return;
        }
        if (mqt_status st = mqt_basis_parse(possible_basis.c_str(), &b.ptr); st != MQT_OK) {
            rc = fail(st);
            return;
        }
        mqt_report* report = nullptr;
        if (mqt_status st = mqt_run_possible(s.ptr, b.ptr, &report); st != MQT_OK) {
            rc = fail(st);
            return;
        }
        rc = emit(report, format);
    });

    std::string evolve_state, evolve_op;
    auto* cmd_evolve = app.add_subcommand("evolve", "apply an invertible operator to a state");
    cmd_evolve->add_option("state", evolve_state, "state reference or inline JSON")->required();
    cmd_evolve->add_option("operator", evolve_op, "operator reference or inline JSON")->required();
    cmd_evolve->callback([&] {
        StateHandle s;
        MatrixHandle m;
        if (mqt_status st = mqt_state_parse(evolve_state.c_str(), &s.ptr); st != MQT_OK) {
            rc = fail(st);
            return;
        }
        if (mqt_status st = mqt_matrix_parse(evolve_op.c_str(), &m.ptr); st != MQT_OK) {
            rc = fail(st);
            return;
        }
        mqt_report* report = nullptr;
        if (mqt_status st = mqt_run_evolve(s.ptr, m.ptr, &report); st != MQT_OK) {
            rc = fail(st);
            return;
        }
        rc = emit(report, format);
    });

    std::string reduce_state, reduce_basis;
    uint32_t reduce_d1 = 2, reduce_d2 = 2;
    int reduce_keep = 2;
    auto* cmd_reduce = app.add_subcommand(
        "reduce", "reduced mixed state of one factor of a bipartite joint state");
    cmd_reduce->add_option("state", reduce_state, "joint state reference or inline JSON")
        ->required();
    cmd_reduce->add_option("--d1", reduce_d1, "first factor dimension")->capture_default_str();
    cmd_reduce->add_option("--d2", reduce_d2, "second factor dimension")->capture_default_str();
    cmd_reduce->add_option("--keep", reduce_keep, "factor to keep (1 or 2)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    cmd_reduce->add_option("--basis", reduce_basis,
                           "measurement for the discarded factor (default: standard basis)");
    cmd_reduce->callback([&] {
        StateHandle s;
        if (mqt_status st = mqt_state_parse(reduce_state.c_str(), &s.ptr); st != MQT_OK) {
            rc = fail(st);
            return;
        }
        BasisHandle b;
        if (!reduce_basis.empty()) {
            if (mqt_status st = mqt_basis_parse(reduce_basis.c_str(), &b.ptr); st != MQT_OK) {
                rc = fail(st);
                return;
            }
        }
        mqt_report* report = nullptr;
        if (mqt_status st =
                mqt_run_reduce(s.ptr, reduce_d1, reduce_d2, reduce_keep, b.ptr, &report);
            st != MQT_OK) {
            rc = fail(st);
            return;
        }
        rc = emit(report, format);
    });

    uint32_t enum_dim = 2;
    bool enum_operators = false;
    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "list all states (or invertible operators) of a system");
    cmd_enumerate->add_option("--dim", enum_dim, "system dimension")->capture_default_str();
    cmd_enumerate->add_flag("--operators", enum_operators,
                            "enumerate invertible operators instead of states");
    cmd_enumerate->callback([&] {
        FieldHandle f;
        if (mqt_status s = mqt_field_parse(field_spec.c_str(), &f.ptr); s != MQT_OK) {
            rc = fail(s);
            return;
        }
        mqt_report* report = nullptr;
        if (mqt_status s = mqt_run_enumerate(f.ptr, enum_dim, projective ? 1 : 0,
                                             enum_operators ? 1 : 0, bound, &report);
            s != MQT_OK) {
            rc = fail(s);
            return;
        }
        rc = emit(report, format);
    });

    auto* cmd_bell = app.add_subcommand(
        "bell", "singlet correlation table and exhaustive local-hidden-variable exclusion");
    cmd_bell->callback([&] {
        mqt_report* report = nullptr;
        if (mqt_status s = mqt_run_bell(&report); s != MQT_OK) {
            rc = fail(s);
            return;
        }
        rc = emit(report, format);
    });

    auto* cmd_noclone =
        app.add_subcommand("noclone", "cloning-contradiction sweep over all mobit input pairs");
    cmd_noclone->callback([&] {
        mqt_report* report = nullptr;
        if (mqt_status s = mqt_run_noclone(&report); s != MQT_OK) {
            rc = fail(s);
            return;
        }
        rc = emit(report, format);
    });

    std::string sd_message;
    auto* cmd_superdense =
        app.add_subcommand("superdense", "send two bits through one mobit plus shared R");
    cmd_superdense->add_option("message", sd_message, "two bits: 00, 01, 10 or 11")->required();
    cmd_superdense->callback([&] {
        mqt_report* report = nullptr;
        if (mqt_status s = mqt_run_superdense(sd_message.c_str(), &report); s != MQT_OK) {
            rc = fail(s);
            return;
        }
        rc = emit(report, format);
    });

    std::string tp_state;
    auto* cmd_teleport =
        app.add_subcommand("teleport", "teleport a mobit state over shared R, all outcomes");
    cmd_teleport->add_option("state", tp_state, "state reference or inline JSON")->required();
    cmd_teleport->callback([&] {
        StateHandle s;
        if (mqt_status st = mqt_state_parse(tp_state.c_str(), &s.ptr); st != MQT_OK) {
            rc = fail(st);
            return;
        }
        mqt_report* report = nullptr;
        if (mqt_status st = mqt_run_teleport(s.ptr, &report); st != MQT_OK) {
            rc = fail(st);
            return;
        }
        rc = emit(report, format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}
