// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "swk/classes.hpp"
#include "swk/engine.hpp"
#include "swk/formulas.hpp"
#include "swk/oracle.hpp"
#include "swk/properties.hpp"

using namespace swk;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::vector<Graph> suite()
{
    std::vector<Graph> out;
    for (const auto* name : {"I", "S3", "star 4", "C3", "Theta3", "L1", "net", "K4"})
        out.push_back(standard_graph(name));
    return out;
}

HomologyGroup group(std::size_t betti, std::vector<long> torsion = {})
{
    HomologyGroup g{betti, {}};
    for (long t : torsion)
        g.torsion.push_back(t);
    return g;
}

// Folds reports into an outcome; skipped items count as failures here.
struct Tally {
    bool ok = true;
    std::size_t items = 0;
    std::ostringstream notes;

    void take(const CheckReport& r)
    {
        items += r.items.size();
        for (const auto& it : r.items)
            if (it.skipped || !it.pass) {
                ok = false;
                notes << " [" << r.name << ", " << r.parameters << "] " << it.label << ": "
                      << (it.skipped ? "skipped, " : "") << it.detail << ";";
            }
        if (r.items.empty()) {
            ok = false;
            notes << " [" << r.name << ", " << r.parameters << "] no items;";
        }
    }
    void expect(bool cond, const std::string& what)
    {
        ++items;
        if (!cond) {
            ok = false;
            notes << " " << what << ";";
        }
    }
    Outcome done() const
    {
        return {ok, std::to_string(items) + " checks" + (ok ? "" : ", failures:" + notes.str())};
    }
};

Outcome oracle_agreement()
{
    Tally t;
    for (const auto& g : suite())
        t.take(cross_check(g, 3, 3));
    return t.done();
}

Outcome k33_torsion()
{
    Tally t;
    Graph g = standard_graph("K3,3");
    auto expected = group(4, {2});
    auto reduced = homology(SwkComplex::fully_reduced(g), 1, 2);
    auto full = homology(SwkComplex::full(g), 1, 2);
    auto oracle = oracle_homology(g, 1, 2);
    t.expect(reduced == expected, "reduced " + reduced.to_string());
    t.expect(full == expected, "full " + full.to_string());
    t.expect(oracle == expected, "oracle " + oracle.to_string());
    return t.done();
}

Outcome k4_case_study()
{
    Tally t;
    Graph g = standard_graph("K4");
    SwkComplex c = SwkComplex::fully_reduced(g);
    auto h12 = homology(c, 1, 2);
    t.expect(h12 == group(4), "H1(B2) = " + h12.to_string());
    for (std::size_t k = 3; k <= 5; ++k) {
        auto h = homology(c, 2, k);
        t.expect(h == group(6 * k - 15), slice_label(2, k) + " = " + h.to_string());
    }
    auto h48 = homology(c, 4, 8);
    t.expect(h48.betti == 1, "H4(B8) = " + h48.to_string());
    return t.done();
}

Outcome euler()
{
    Tally t;
    auto graphs = suite();
    graphs.push_back(standard_graph("K3,3"));
    for (const auto& g : graphs)
        t.take(euler_check(g, 6));
    t.expect(euler_characteristic(standard_graph("K4"), 2) == -3, "chi(B2(K4)) != -3");
    for (std::size_t k = 0; k <= 6; ++k)
        t.expect(euler_characteristic(standard_graph("I"), k) == 1, "chi(B" + std::to_string(k) + "(I)) != 1");
    return t.done();
}

Outcome unitrivalent()
{
    Tally t;
    Graph net = standard_graph("net");
    SwkComplex c = SwkComplex::fully_reduced(net);
    auto h36 = homology(c, 3, 6), h37 = homology(c, 3, 7);
    t.expect(h36 == group(1), "H3(B6) = " + h36.to_string());
    t.expect(h37 == group(6), "H3(B7) = " + h37.to_string());
    t.take(unitrivalent_top_check(net, 4, 7));
    return t.done();
}

Outcome relations()
{
    Tally t;
    std::size_t kinds[6] = {};
    const char* prefixes[6] = {"star", "loop", "I ", "X ", "Q ", "Theta"};
    std::size_t o_count = 0;
    for (const auto* name : {"S3", "star 4", "L1", "Theta3", "C3", "K4"}) {
        auto r = relation_suite(standard_graph(name));
        t.take(r);
        for (const auto& it : r.items) {
            for (int j = 0; j < 6; ++j)
                kinds[j] += it.label.rfind(prefixes[j], 0) == 0;
            o_count += it.label.rfind("O ", 0) == 0;
        }
    }
    for (int j = 0; j < 6; ++j)
        t.expect(kinds[j] > 0, std::string("no instance of ") + prefixes[j]);
    t.expect(o_count > 0, "no instance of O");
    return t.done();
}

Outcome quasi_iso()
{
    Tally t;
    for (const auto& g : suite()) {
        std::vector<std::size_t> all;
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
            all.push_back(v);
        t.take(verify_reduced_quasi_iso(g, all, 2, 4));
    }
    return t.done();
}

Outcome injectivity()
{
    Tally t;
    for (const auto& g : suite())
        t.take(verify_edge_injectivity(g, 2, 3));
    return t.done();
}

Outcome les()
{
    Tally t;
    Graph k4 = standard_graph("K4"), s3 = standard_graph("S3"), c1 = standard_graph("C1");
    std::size_t v4 = k4.vertex("4"), center = s3.vertex("v0"), v = 0;
    t.take(les_check(k4, v4, k4.half_edges_at(v4).front(), 3));
    t.take(les_check(s3, center, s3.half_edges_at(center).front(), 3));
    t.take(les_check(c1, v, c1.half_edges_at(v).front(), 3));
    return t.done();
}

Outcome properties()
{
    Tally t;
    auto r = property_suite(1, 50, 3);
    t.take(r);
    for (const auto* kind : {"d^2 = 0", "bigrading", "Z[E]-linear", "functor composition", "Smith certificates",
                             "disjoint-union Kunneth"}) {
        std::size_t n = 0;
        for (const auto& it : r.items)
            n += it.label.find(kind) != std::string::npos;
        t.expect(n >= 50, std::string(kind) + " ran " + std::to_string(n) + " times");
    }
    return t.done();
}

} // namespace

int main()
{
    std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"oracle agreement on the suite, i<=3, k<=3", oracle_agreement},
        {"K3,3: H1(B2) = Z^4 + Z/2 (complex and oracle)", k33_torsion},
        {"K4: H1(B2), H2(B3..B5), H4(B8)", k4_case_study},
        {"Euler characteristic, k<=6", euler},
        {"net: top and codimension-one degrees", unitrivalent},
        {"relation suite", relations},
        {"reduced quasi-isomorphism, i<=2, k<=4", quasi_iso},
        {"edge multiplication injective, i<=2, k<=3", injectivity},
        {"vertex long exact sequence, k<=3", les},
        {"property suites, 50 random graphs", properties},
    };
    bool all = true;
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[j].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        char time[32];
        std::snprintf(time, sizeof time, "%.1fs", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << j + 1 << ". " << criteria[j].first << " (" << o.detail
                  << ", " << time << ")" << std::endl;
    }
    return all ? 0 : 1;
}
