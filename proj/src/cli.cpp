#include "angelesco/cli.hpp"

#include <json.hpp>

#include <functional>
#include <ostream>

#include "angelesco/asymptotics.hpp"
#include "angelesco/jacobi.hpp"
#include "angelesco/type1.hpp"
#include "angelesco/type2.hpp"
#include "angelesco/verification.hpp"
#include "angelesco/zeros.hpp"

#ifndef ANGELESCO_VERSION
#define ANGELESCO_VERSION "0.0.0"
#endif

namespace angelesco::cli {

namespace {

using nlohmann::json;

std::string format_real(const Real& x, int digits) {
    return x.str(digits);
}

void csv_provenance(std::ostream& out, const std::string& command_line) {
    out << "# command: " << command_line << "\n";
    out << "# version: " << ANGELESCO_VERSION << "\n";
    out << "# precision: " << precision() << "\n";
}

json json_provenance(const std::string& command_line) {
    return json{{"command", command_line},
                {"version", ANGELESCO_VERSION},
                {"precision", precision()}};
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const PrecisionError& e) {
        err << "precision failure: " << e.what() << "\n";
        err << "hint: rerun with --precision " << 2 * precision() << "\n";
        return kExitPrecisionError;
    } catch (const std::domain_error& e) {
        err << "invalid configuration: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        err << "invalid configuration: " << e.what() << "\n";
        return kExitConfigError;
    }
}

struct CoeffRow {
    std::string label;
    long power;
    Complex value;
};

std::vector<CoeffRow> poly_rows(const std::string& label, const Poly& p) {
    std::vector<CoeffRow> rows;
    for (long k = 0; k <= p.degree(); ++k) {
        Complex c = p.coeff(k);
        if (c.is_zero()) continue;
        rows.push_back(CoeffRow{label, k, c});
    }
    return rows;
}

}  // namespace

std::string format_real(const Real& x) { return format_real(x, precision()); }

int run_coeffs(const CoeffsConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        set_precision(cfg.precision_digits);
        StarWeight w(cfg.r, Real(cfg.beta));
        if (cfg.k < 1 || cfg.k > cfg.r)
            throw std::invalid_argument("k must lie in 1..r");

        std::vector<CoeffRow> rows;
        if (cfg.family == "p-kernel") {
            rows = poly_rows("p", kernel_poly(cfg.n, w));
        } else if (cfg.family == "jacobi-kernel") {
            rows = poly_rows("jacobi", jacobi_kernel(cfg.n, JacobiParams(Real(cfg.alpha), w)));
        } else if (cfg.family == "type2-diagonal") {
            rows = poly_rows("L", type2_diagonal(cfg.n, w).poly);
        } else if (cfg.family == "type2-above") {
            rows = poly_rows("L", type2_above(cfg.n, cfg.k, w).poly);
        } else if (cfg.family == "type1-diagonal" || cfg.family == "type1-above" ||
                   cfg.family == "type1-below") {
            Type1Vector v = cfg.family == "type1-diagonal" ? type1_diagonal(cfg.n, w)
                            : cfg.family == "type1-above"  ? type1_above(cfg.n, cfg.k, w)
                                                           : type1_below(cfg.n, cfg.k, w);
            for (int j = 1; j <= cfg.r; ++j)
                for (auto& row : poly_rows(std::to_string(j), v.polys[static_cast<size_t>(j - 1)]))
                    rows.push_back(row);
        } else {
            throw std::invalid_argument("unknown family '" + cfg.family + "'");
        }

        if (cfg.format == Format::csv) {
            csv_provenance(out, cfg.command_line);
            out << "# family: " << cfg.family << "\n";
            out << "# r: " << cfg.r << "\n# beta: " << cfg.beta << "\n# n: " << cfg.n << "\n";
            if (cfg.family == "type1-above" || cfg.family == "type1-below" ||
                cfg.family == "type2-above")
                out << "# k: " << cfg.k << "\n";
            if (cfg.family == "jacobi-kernel") out << "# alpha: " << cfg.alpha << "\n";
            out << "ray_or_family,power,re,im\n";
            for (const auto& row : rows)
                out << row.label << ',' << row.power << ',' << format_real(row.value.re) << ','
                    << format_real(row.value.im) << "\n";
        } else {
            json doc = json_provenance(cfg.command_line);
            doc["family"] = cfg.family;
            doc["r"] = cfg.r;
            doc["beta"] = cfg.beta;
            doc["n"] = cfg.n;
            if (cfg.family == "jacobi-kernel") doc["alpha"] = cfg.alpha;
            if (cfg.family == "type1-above" || cfg.family == "type1-below" ||
                cfg.family == "type2-above")
                doc["k"] = cfg.k;
            json jrows = json::array();
            for (const auto& row : rows)
                jrows.push_back(json{{"ray_or_family", row.label},
                                     {"power", row.power},
                                     {"re", format_real(row.value.re)},
                                     {"im", format_real(row.value.im)}});
            doc["rows"] = std::move(jrows);
            out << doc.dump(2) << "\n";
        }
        return kExitOk;
    });
}

int run_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        set_precision(cfg.precision_digits);
        StarWeight w(cfg.r, Real(cfg.beta));

        CheckReport rep;
        if (cfg.check == "orthogonality")
            rep = verify_orthogonality(cfg.n, w);
        else if (cfg.check == "recurrence")
            rep = verify_recurrence(cfg.n, w);
        else if (cfg.check == "ode-type1")
            rep = verify_ode_type1(cfg.n, w);
        else if (cfg.check == "ode-type2")
            rep = verify_ode_type2(cfg.n, w);
        else if (cfg.check == "rodrigues")
            rep = verify_rodrigues(cfg.n, w);
        else if (cfg.check == "lowering-raising")
            rep = verify_lowering_raising(cfg.n, w);
        else if (cfg.check == "limit")
            rep = verify_limit(cfg.n, w);
        else if (cfg.check == "w-equation")
            rep = verify_w_equation(cfg.r);
        else
            throw std::invalid_argument("unknown check '" + cfg.check + "'");

        json doc = json_provenance(cfg.command_line);
        doc["check"] = rep.check;
        doc["r"] = cfg.r;
        doc["beta"] = cfg.beta;
        doc["n"] = cfg.n;
        doc["pass"] = rep.pass();
        doc["max_residual"] = format_real(rep.max_residual());
        json items = json::array();
        for (const auto& i : rep.items)
            items.push_back(json{{"name", i.name},
                                 {"residual", format_real(i.residual)},
                                 {"tolerance", format_real(i.tolerance)},
                                 {"pass", i.pass},
                                 {"skipped", i.skipped}});
        doc["items"] = std::move(items);
        out << doc.dump(2) << "\n";
        return rep.pass() ? kExitOk : kExitVerifyFailed;
    });
}

int run_density(const DensityConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        set_precision(cfg.precision_digits);
        DensityKind kind;
        if (cfg.type == "typeI")
            kind = DensityKind::type1;
        else if (cfg.type == "typeII-ray")
            kind = DensityKind::type2_per_ray;
        else
            throw std::invalid_argument("unknown density type '" + cfg.type + "'");
        if (cfg.grid < 2) throw std::invalid_argument("grid must be at least 2");

        DensityCurve curve = sample_density(cfg.r, cfg.grid, kind);
        csv_provenance(out, cfg.command_line);
        out << "# type: " << cfg.type << "\n# r: " << cfg.r << "\n# grid: " << cfg.grid << "\n";
        out << "x,u\n";
        for (const auto& [x, u] : curve.samples)
            out << format_real(x) << ',' << format_real(u) << "\n";
        return kExitOk;
    });
}

int run_zeros(const ZerosConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        set_precision(cfg.precision_digits);
        StarWeight w(cfg.r, Real(cfg.beta));

        ZeroSet zs;
        if (cfg.family == "p-kernel")
            zs = real_zeros_type1_kernel(cfg.n, w);
        else if (cfg.family == "type2")
            zs = real_zeros_type2(cfg.n, w);
        else
            throw std::invalid_argument("unknown zero family '" + cfg.family + "'");

        ZeroSet rescaled = rescale_zeros(zs, cfg.n, cfg.r);

        csv_provenance(out, cfg.command_line);
        out << "# family: " << cfg.family << "\n# r: " << cfg.r << "\n# beta: " << cfg.beta
            << "\n# n: " << cfg.n << "\n";
        if (cfg.ks) out << "# ks: " << format_real(ks_distance(rescaled, cfg.r)) << "\n";
        if (cfg.rescale) {
            out << "index,zero,rescaled\n";
            for (size_t i = 0; i < zs.zeros.size(); ++i)
                out << (i + 1) << ',' << format_real(zs.zeros[i]) << ','
                    << format_real(rescaled.zeros[i]) << "\n";
        } else {
            out << "index,zero\n";
            for (size_t i = 0; i < zs.zeros.size(); ++i)
                out << (i + 1) << ',' << format_real(zs.zeros[i]) << "\n";
        }
        return kExitOk;
    });
}

}  // namespace angelesco::cli
