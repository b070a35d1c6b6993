// thetakit command-line front end: compute, render, verify, tabulate and
// cache the closed forms.
//
// Exit codes: 0 success/match, 1 usage error, 2 verification mismatch,
// 3 internal error.

#include "thetakit/thetakit.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <functional>
#include <optional>
#include <unistd.h>

namespace fs = std::filesystem;
using namespace thetakit;

namespace {

constexpr int kCacheVersion = 1;

std::string default_cache_path() {
    if (const char* env = std::getenv("THETAKIT_CACHE")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return (fs::path(xdg) / "thetakit" / "cache.json").string();
    if (const char* home = std::getenv("HOME"))
        return (fs::path(home) / ".cache" / "thetakit" / "cache.json").string();
    return "thetakit_cache.json";
}

class Cache {
  public:
    Cache(std::string path, bool enabled) : path_(std::move(path)), enabled_(enabled) {
        if (!enabled_) return;
        std::ifstream in(path_);
        if (!in) return;
        try {
            json doc = json::parse(in);
            if (doc.at("version").get<int>() == kCacheVersion) entries_ = doc.at("entries");
        } catch (...) {
            // unreadable or version mismatch: ignore and rebuild
        }
    }

    std::optional<json> get(const std::string& key) const {
        if (!enabled_) return std::nullopt;
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return *it;
    }

    void put(const std::string& key, const json& value) {
        if (!enabled_) return;
        entries_[key] = value;
        dirty_ = true;
    }

    // Atomic write: temp file in the same directory, then rename.
    ~Cache() {
        if (!enabled_ || !dirty_) return;
        try {
            const fs::path p(path_);
            if (p.has_parent_path()) fs::create_directories(p.parent_path());
            const fs::path tmp = p.string() + ".tmp." + std::to_string(::getpid());
            {
                std::ofstream out(tmp);
                out << json{{"version", kCacheVersion}, {"entries", entries_}}.dump();
            }
            fs::rename(tmp, p);
        } catch (...) {
            // cache is a pure accelerator; failure to persist is not an error
        }
    }

  private:
    std::string path_;
    bool enabled_;
    json entries_ = json::object();
    bool dirty_ = false;
};

std::string latex_rational(int num) {
    return (num < 0 ? "-" : "+") + std::to_string(std::abs(num));
}

void print_theta1(const Theta1ClosedForm& f, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(f).dump() << "\n";
    } else if (format == "latex") {
        std::string poly = render_latex(f.coeff_poly);
        std::cout << "\\vartheta_1^{(" << 2 * f.nu + 1 << ")}(0) = " << latex_rational(f.sign_factor)
                  << "\\,\\eta^3" << (poly == "1" ? "" : "\\," + poly) << "\n";
    } else {
        std::string poly = render_human(f.coeff_poly);
        std::cout << "theta1^(" << 2 * f.nu + 1 << ")(0) = " << (f.sign_factor > 0 ? "" : "-")
                  << "2 * eta^3" << (poly == "1" ? "" : " * (" + poly + ")") << "\n";
    }
}

void print_theta4(const Theta4ClosedForm& f, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(f).dump() << "\n";
    } else if (format == "latex") {
        std::cout << "\\vartheta_4^{(" << 2 * f.nu << ")}(0) = " << render_latex(f.ratio_poly)
                  << "\\,w\n";
    } else {
        std::cout << "theta4^(" << 2 * f.nu << ")(0) = (" << render_human(f.ratio_poly) << ") * w\n";
    }
}

void print_phi(unsigned k, const GradedPoly& p, const std::string& format) {
    if (format == "json") {
        std::cout << json{{"kind", "phi"}, {"k", k}, {"poly", to_json(p)}}.dump() << "\n";
    } else if (format == "latex") {
        std::cout << "\\Phi_{" << k << "} = " << render_latex(p) << "\n";
    } else {
        std::cout << "Phi_" << k << " = " << render_human(p) << "\n";
    }
}

GradedPoly cached_poly(Cache& cache, const std::string& key, const std::function<GradedPoly()>& make) {
    if (auto hit = cache.get(key)) return poly_from_json(hit->at("poly"));
    GradedPoly p = make();
    cache.put(key, json{{"poly", to_json(p)}});
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact closed forms for theta-function derivatives in Eisenstein series"};
    app.require_subcommand(1);

    std::string cache_path = default_cache_path();
    bool no_cache = false;
    std::string format = "human";

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--cache", cache_path, "cache file path");
        cmd->add_flag("--no-cache", no_cache, "disable the cache");
        if (with_format)
            cmd->add_option("--format,-f", format, "output format")
                ->check(CLI::IsMember({"human", "json", "latex"}));
    };

    unsigned nu = 0;
    unsigned order_flag = 0;
    unsigned k_index = 1;
    long long window = 200;
    std::string target;
    unsigned order = 0;
    unsigned max_nu = 6;
    std::string out_path;

    auto* c_theta1 = app.add_subcommand("theta1", "closed form of theta1^(2nu+1)(0)");
    c_theta1->add_option("--nu,-n", nu, "derivative index nu (order 2nu+1)")->required();
    add_common(c_theta1);

    auto* c_theta4 = app.add_subcommand("theta4", "closed form of theta4^(2nu)(0)");
    auto* nu_opt = c_theta4->add_option("--nu,-n", nu, "derivative index nu (order 2nu)");
    c_theta4->add_option("--order", order_flag, "derivative order (odd orders are identically zero)")
        ->excludes(nu_opt);
    add_common(c_theta4);

    auto* c_phi = app.add_subcommand("phi", "closed form of Phi_k (k odd)");
    c_phi->add_option("--k", k_index, "odd index k")->required();
    add_common(c_phi);

    auto* c_verify = app.add_subcommand("verify", "verify a closed form against its q-series oracle");
    c_verify->add_option("--target", target, "theta1|theta4|phi|eisenstein")
        ->required()
        ->check(CLI::IsMember({"theta1", "theta4", "phi", "eisenstein"}));
    c_verify->add_option("--order", order, "derivative order / series index")->required();
    c_verify->add_option("--window,-w", window, "lattice coefficient window");
    add_common(c_verify);

    auto* c_table = app.add_subcommand("table", "write all closed forms up to max-nu with verdicts");
    c_table->add_option("--max-nu", max_nu, "largest nu to tabulate");
    c_table->add_option("--out", out_path, "output path (default stdout)");
    add_common(c_table, false);

    auto* c_errata = app.add_subcommand("errata", "machine-readable list of refuted published statements");
    c_errata->add_option("--window,-w", window, "verification window");
    add_common(c_errata, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        Cache cache(cache_path, !no_cache);

        if (c_theta1->parsed()) {
            Theta1ClosedForm f;
            f.nu = nu;
            f.sign_factor = (nu % 2 == 0) ? 2 : -2;
            f.coeff_poly = cached_poly(cache, "theta1:" + std::to_string(nu),
                                       [&] { return s3_coeff_poly(nu); });
            print_theta1(f, format);
        } else if (c_theta4->parsed()) {
            if (c_theta4->count("--order")) {
                if (order_flag % 2 != 0) {
                    std::cout << "0\n";
                    return 0;
                }
                nu = order_flag / 2;
            }
            if (nu == 0) {
                std::cout << "theta4(0) itself; ratio 1\n";
                return 0;
            }
            Theta4ClosedForm f;
            f.nu = nu;
            f.ratio_poly = cached_poly(cache, "theta4:" + std::to_string(nu),
                                       [&] { return theta4_ratio_poly(nu); });
            print_theta4(f, format);
        } else if (c_phi->parsed()) {
            if (k_index % 2 == 0) {
                std::cerr << "phi: --k must be odd\n";
                return 1;
            }
            GradedPoly p = cached_poly(cache, "phi:" + std::to_string(k_index),
                                       [&] { return phi_poly(k_index); });
            print_phi(k_index, p, format);
        } else if (c_verify->parsed()) {
            VerificationReport rep;
            if (target == "theta1") {
                if (order % 2 == 0) {
                    std::cerr << "verify: theta1 order must be odd (2nu+1)\n";
                    return 1;
                }
                rep = verify_theta1((order - 1) / 2, window);
            } else if (target == "theta4") {
                if (order % 2 != 0 || order == 0) {
                    std::cerr << "verify: theta4 order must be even and positive\n";
                    return 1;
                }
                rep = verify_theta4(order / 2, window);
            } else if (target == "phi") {
                if (order % 2 == 0) {
                    std::cerr << "verify: phi index must be odd\n";
                    return 1;
                }
                rep = verify_phi(order, window);
            } else {
                if (order % 2 != 0 || order < 2) {
                    std::cerr << "verify: eisenstein weight must be even and >= 2\n";
                    return 1;
                }
                rep = verify_eisenstein(order, window);
            }
            std::cout << to_json(rep).dump() << "\n";
            return rep.match() ? 0 : 2;
        } else if (c_table->parsed()) {
            json doc = json::array();
            for (unsigned v = 0; v <= max_nu; ++v) {
                json entry = to_json(theta1_closed_form(v));
                entry["verification"] = to_json(verify_theta1(v, 200));
                doc.push_back(entry);
            }
            for (unsigned v = 1; v <= max_nu; ++v) {
                json entry = to_json(theta4_closed_form(v));
                entry["verification"] = to_json(verify_theta4(v, 100));
                doc.push_back(entry);
            }
            for (unsigned kk = 1; kk <= 2 * max_nu + 1; kk += 2) {
                json entry = {{"kind", "phi"}, {"k", kk}, {"poly", to_json(phi_poly(kk))}};
                entry["verification"] = to_json(verify_phi(kk, 60));
                doc.push_back(entry);
            }
            if (out_path.empty()) {
                std::cout << doc.dump(2) << "\n";
            } else {
                std::ofstream out(out_path);
                if (!out) {
                    std::cerr << "table: cannot open " << out_path << " for writing\n";
                    return 3;
                }
                out << doc.dump(2) << "\n";
                if (!out) {
                    std::cerr << "table: write failed for " << out_path << "\n";
                    return 3;
                }
            }
        } else if (c_errata->parsed()) {
            std::cout << errata_report(window).dump(2) << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
