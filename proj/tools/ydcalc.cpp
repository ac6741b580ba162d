// ydcalc: difficulty, displacement, and semigroup calculator for Young
// diagrams. Exit codes: 0 success, 1 parse/domain errors, 2 verification
// failures.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ydc/brill_noether.hpp"
#include "ydc/cache.hpp"
#include "ydc/chain.hpp"
#include "ydc/constructions.hpp"
#include "ydc/difficulty.hpp"
#include "ydc/displacement.hpp"
#include "ydc/errors.hpp"
#include "ydc/semigroup.hpp"
#include "ydc/serialize.hpp"

namespace {

using nlohmann::json;
using namespace ydc;

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos)
        throw DomainError("bad range '" + text + "' (expected MIN..MAX)");
    Range r;
    r.lo = std::stoi(text.substr(0, pos));
    r.hi = std::stoi(text.substr(pos + 2));
    if (r.lo < 1 || r.hi < r.lo) throw DomainError("bad range '" + text + "'");
    return r;
}

void print_steps_md(std::ostream& os, const ValidSequence& seq) {
    Partition prev;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const Step& s = seq.steps[i];
        os << "  " << (i + 1) << ". " << prev.str() << " -> " << s.partition.str()
           << "  via " << s.lambda.str() << "  (k=" << s.k << ")\n";
        prev = s.partition;
    }
}

void emit_certificate(const DifficultyResult& result, const std::string& format,
                      bool with_steps) {
    if (format == "json") {
        json doc = certificate_to_json(result);
        if (!with_steps) doc.erase("steps");
        std::cout << doc.dump(1) << "\n";
    } else if (format == "csv") {
        std::cout << "partition,delta\n"
                  << result.target.str() << "," << result.delta << "\n";
    } else {
        std::cout << "partition: " << result.target.str() << "\n"
                  << "delta: " << result.delta << "\n";
        if (with_steps) {
            std::cout << "certificate (cost " << result.certificate.cost() << "):\n";
            print_steps_md(std::cout, result.certificate);
        }
    }
}

ValidSequence load_certificate_file(const std::string& path, Partition* target,
                                    int* delta) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open certificate file " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw DomainError("cannot parse certificate file: " + std::string(e.what()));
    }
    if (!doc.is_object() || doc.value("schema", 0) != 1)
        throw DomainError("unsupported certificate schema");
    if (target) *target = Partition::parse(doc.at("target").get<std::string>());
    if (delta) *delta = doc.value("delta", -1);
    return steps_from_json(doc.at("steps"));
}

int run(int argc, char** argv) {
    CLI::App app{"Displacement calculus of partitions: difficulties with "
                 "certificates, constructive sequences, numerical-semigroup "
                 "and Brill-Noether arithmetic"};
    app.require_subcommand(1);
    std::string format = "md";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"md", "csv", "json"}))
        ->capture_default_str();

    // delta
    auto* cmd_delta = app.add_subcommand("delta", "Difficulty of a partition");
    std::string delta_partition;
    bool delta_cert = false, delta_oracle = false;
    std::string delta_cache;
    cmd_delta->add_option("partition", delta_partition, "Partition, e.g. 4,4,4")
        ->required();
    cmd_delta->add_flag("--certificate", delta_cert, "Print the witnessing sequence");
    cmd_delta->add_flag("--oracle", delta_oracle,
                        "Cross-check with the exhaustive oracle (|P| <= 12)");
    cmd_delta->add_option("--cache", delta_cache, "Difficulty cache file");

    // table
    auto* cmd_table = app.add_subcommand("table", "Difficulty table for boxes (a^b)");
    std::string table_a, table_b, table_cache;
    cmd_table->add_option("--a", table_a, "Range for a, e.g. 2..12")->required();
    cmd_table->add_option("--b", table_b, "Range for b, e.g. 2..11")->required();
    cmd_table->add_option("--cache", table_cache, "Difficulty cache file");

    // displace
    auto* cmd_disp = app.add_subcommand("displace", "Displace a partition");
    std::string disp_partition, disp_lambda;
    bool disp_up = false, disp_down = false;
    cmd_disp->add_option("partition", disp_partition)->required();
    cmd_disp->add_option("--lambda", disp_lambda, "Progression: empty, {m}, m mod d")
        ->required();
    cmd_disp->add_flag("--up", disp_up);
    cmd_disp->add_flag("--down", disp_down);

    // linkage
    auto* cmd_link = app.add_subcommand("linkage", "Canonical witness for a linked pair");
    std::string link_p, link_q;
    cmd_link->add_option("P", link_p)->required();
    cmd_link->add_option("Q", link_q)->required();

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "Constructive sequences");
    auto* cmd_box = cmd_construct->add_subcommand("box", "Box partition (a^b)");
    int box_a = 0, box_b = 0;
    cmd_box->add_option("--a", box_a)->required();
    cmd_box->add_option("--b", box_b)->required();
    auto* cmd_prim = cmd_construct->add_subcommand("primitive", "Primitive partition");
    std::string prim_partition;
    cmd_prim->add_option("partition", prim_partition)->required();
    cmd_construct->require_subcommand(1);

    // semigroup
    auto* cmd_sg = app.add_subcommand("semigroup", "Numerical semigroup arithmetic");
    std::string sg_spec;
    bool sg_partition = false, sg_witness = false;
    cmd_sg->add_option("spec", sg_spec, "gens:2,3 or gaps:1,3,5")->required();
    cmd_sg->add_flag("--partition", sg_partition, "Print the associated partition");
    cmd_sg->add_flag("--witness", sg_witness, "Print the imprimitivity witness");

    // bn
    auto* cmd_bn = app.add_subcommand("bn", "Brill-Noether record for (g,d,r)");
    int bn_g = 0, bn_d = 0, bn_r = 0;
    cmd_bn->add_option("--g", bn_g)->required();
    cmd_bn->add_option("--d", bn_d)->required();
    cmd_bn->add_option("--r", bn_r)->required();

    // chain
    auto* cmd_chain = app.add_subcommand("chain", "Replay a certificate as a bridge chain");
    std::string chain_file;
    int chain_genus = 0;
    cmd_chain->add_option("--certificate", chain_file, "Certificate JSON file")
        ->required();
    cmd_chain->add_option("--genus", chain_genus, "Final genus")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Verify a certificate file");
    std::string verify_file;
    cmd_verify->add_option("--file", verify_file, "Certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (cmd_delta->parsed()) {
        Partition p = Partition::parse(delta_partition);
        DifficultyEngine engine;
        std::optional<DifficultyCache> cache;
        if (!delta_cache.empty()) {
            cache.emplace(delta_cache);
            cache->load();
        }
        DifficultyResult result;
        if (cache) {
            if (auto hit = cache->lookup(p)) {
                result.target = p;
                result.delta = hit->delta;
                result.certificate = hit->certificate;
            } else {
                result = engine.difficulty(p);
                cache->put(p, result.delta, result.certificate);
                cache->save();
            }
        } else {
            result = engine.difficulty(p);
        }
        verify_sequence(result.certificate, p);
        emit_certificate(result, format, delta_cert);
        if (delta_oracle) {
            int oracle = difficulty_oracle(p);
            std::cout << "oracle: " << oracle << "\n";
            if (oracle != result.delta) {
                std::cerr << "error: oracle disagrees with the engine\n";
                return 2;
            }
        }
        return 0;
    }

    if (cmd_table->parsed()) {
        Range ra = parse_range(table_a), rb = parse_range(table_b);
        DifficultyEngine engine;
        std::optional<DifficultyCache> cache;
        if (!table_cache.empty()) {
            cache.emplace(table_cache);
            cache->load();
        }
        auto progress = [](int a, int b, int delta) {
            std::cerr << "delta((" << a << "^" << b << ")) = " << delta << "\n";
        };
        auto table = difficulty_table({ra.lo, ra.hi}, {rb.lo, rb.hi}, engine,
                                      cache ? &*cache : nullptr, progress);
        if (format == "json") {
            json doc = {{"schema", 1},
                        {"a", {ra.lo, ra.hi}},
                        {"b", {rb.lo, rb.hi}},
                        {"delta", table}};
            std::cout << doc.dump(1) << "\n";
        } else if (format == "csv") {
            std::cout << "a\\b";
            for (int b = rb.lo; b <= rb.hi; ++b) std::cout << "," << b;
            std::cout << "\n";
            for (int a = ra.lo; a <= ra.hi; ++a) {
                std::cout << a;
                for (int b = rb.lo; b <= rb.hi; ++b)
                    std::cout << "," << table[a - ra.lo][b - rb.lo];
                std::cout << "\n";
            }
        } else {
            std::cout << "| a\\b |";
            for (int b = rb.lo; b <= rb.hi; ++b) std::cout << " " << b << " |";
            std::cout << "\n|---|";
            for (int b = rb.lo; b <= rb.hi; ++b) std::cout << "---|";
            std::cout << "\n";
            for (int a = ra.lo; a <= ra.hi; ++a) {
                std::cout << "| " << a << " |";
                for (int b = rb.lo; b <= rb.hi; ++b)
                    std::cout << " " << table[a - ra.lo][b - rb.lo] << " |";
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (cmd_disp->parsed()) {
        if (disp_up == disp_down)
            throw DomainError("exactly one of --up / --down is required");
        Partition p = Partition::parse(disp_partition);
        Progression lambda = Progression::parse(disp_lambda);
        Partition out =
            displace(p, lambda, disp_up ? Direction::Up : Direction::Down);
        if (format == "json")
            std::cout << json{{"schema", 1}, {"result", out.str()}}.dump() << "\n";
        else
            std::cout << out.str() << "\n";
        return 0;
    }

    if (cmd_link->parsed()) {
        Partition p = Partition::parse(link_p), q = Partition::parse(link_q);
        auto witness = linkage(p, q);
        if (format == "json") {
            json doc = {{"schema", 1}, {"linked", witness.has_value()}};
            if (witness) {
                doc["k"] = witness->k;
                doc["lambda"] = witness->lambda.str();
                doc["added_rows"] = witness->added_rows;
            }
            std::cout << doc.dump() << "\n";
        } else if (witness) {
            std::cout << "linked: k=" << witness->k << " lambda=" << witness->lambda.str()
                      << "\n";
        } else {
            std::cout << "not linked\n";
        }
        return 0;
    }

    if (cmd_construct->parsed()) {
        ValidSequence seq;
        if (cmd_box->parsed())
            seq = box_construction(box_a, box_b);
        else
            seq = primitive_construction(Partition::parse(prim_partition));
        DifficultyResult as_result{seq.target(), seq.cost(), seq, {}};
        verify_sequence(seq, seq.target());
        emit_certificate(as_result, format, true);
        return 0;
    }

    if (cmd_sg->parsed()) {
        NumericalSemigroup s = NumericalSemigroup::parse(sg_spec);
        std::optional<ImprimitivityWitness> witness;
        if (sg_witness) witness = imprimitivity_witness(s);
        if (format == "json") {
            json doc = {{"schema", 1},
                        {"gaps", s.gaps()},
                        {"genus", s.genus()},
                        {"weight", s.weight()},
                        {"primitive", s.primitive()}};
            if (sg_partition) doc["partition"] = s.to_partition().str();
            if (sg_witness) {
                if (witness)
                    doc["witness"] = {{"f", witness->f}, {"k", witness->k}};
                else
                    doc["witness"] = nullptr;
            }
            std::cout << doc.dump(1) << "\n";
        } else {
            std::cout << s.str() << "\n"
                      << "genus: " << s.genus() << "\n"
                      << "weight: " << s.weight() << "\n"
                      << "primitive: " << (s.primitive() ? "yes" : "no") << "\n";
            if (sg_partition)
                std::cout << "partition: " << s.to_partition().str() << "\n";
            if (sg_witness) {
                if (witness)
                    std::cout << "witness: f=" << witness->f << " k=" << witness->k
                              << "\n";
                else
                    std::cout << "witness: none (primitive)\n";
            }
        }
        return 0;
    }

    if (cmd_bn->parsed()) {
        BnRecord rec = brill_noether(bn_g, bn_d, bn_r);
        if (format == "json") {
            json doc = {{"schema", 1},
                        {"g", rec.g},
                        {"d", rec.d},
                        {"r", rec.r},
                        {"rho", rec.rho},
                        {"box", rec.box.str()},
                        {"expected_w_dim", rec.expected_w_dim},
                        {"expected_codim", rec.expected_codim},
                        {"in_theorem_range", rec.in_theorem_range}};
            std::cout << doc.dump(1) << "\n";
        } else {
            std::cout << "rho: " << rec.rho << "\n"
                      << "box: " << rec.box.str() << "\n"
                      << "expected_w_dim: " << rec.expected_w_dim << "\n"
                      << "expected_codim: " << rec.expected_codim << "\n"
                      << "in_theorem_range: " << (rec.in_theorem_range ? "yes" : "no")
                      << "\n";
        }
        return 0;
    }

    if (cmd_chain->parsed()) {
        ValidSequence seq = load_certificate_file(chain_file, nullptr, nullptr);
        verify_sequence(seq, std::nullopt);
        ChainState state = realize_certificate(seq, chain_genus);
        json trace = json::array();
        for (const BridgeTrace& t : state.trace)
            trace.push_back({{"lambda", t.lambda.str()},
                             {"kind", bridge_kind_str(t)},
                             {"displaced", t.displaced}});
        json doc = {{"schema", 1},
                    {"genus", state.genus},
                    {"degree", state.degree},
                    {"vanishing", state.a.entries()},
                    {"partition", from_vanishing(state.a).first.str()},
                    {"refined", state.refined},
                    {"trace", std::move(trace)}};
        std::cout << doc.dump(1) << "\n";
        return 0;
    }

    if (cmd_verify->parsed()) {
        Partition target;
        int declared = -1;
        ValidSequence seq = load_certificate_file(verify_file, &target, &declared);
        int cost = verify_sequence(seq, target);
        if (declared >= 0 && declared != cost)
            throw VerificationError(VerificationError::Kind::WrongEndpoint, -1,
                                    "declared delta " + std::to_string(declared) +
                                        " does not match cost " + std::to_string(cost));
        std::cout << "target: " << target.str() << "\n"
                  << "cost: " << cost << "\n"
                  << "ok\n";
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ydc::VerificationError& e) {
        std::cerr << "verification-error: " << e.what() << "\n";
        return 2;
    } catch (const ydc::CertificateInvalid& e) {
        std::cerr << "verification-error: " << e.what() << "\n";
        return 2;
    } catch (const ydc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
