#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mealy/cli.hpp"
#include "mealy/errors.hpp"
#include "mealy/transforms.hpp"
#include "support.hpp"

using namespace mealy;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("mealy_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_CASE("document round trip") {
    std::vector<MealyMachine> machines{aleshin_automaton(), make_bellaterra(Scope::of({0, 2})),
                                       make_D(Scope::single(2)), dual_automaton(make_aleshin(3))};
    testing::Rng rng(61);
    for (int i = 0; i < 20; ++i)
        machines.push_back(testing::random_machine(rng, 1 + i % 5, 2 + i % 3));
    for (const auto& m : machines) {
        const std::string text = serialize_document(m);
        const MealyMachine back = parse_document(text);
        CHECK(serialize_document(back) == text);
        CHECK(back.name() == m.name());
        CHECK(back.states() == m.states());
        CHECK(back.table().next == m.table().next);
        CHECK(back.table().out == m.table().out);
        CHECK(isomorphic(back, m));
    }
}

TEST_CASE("document parsing accepts comments and reports bad lines") {
    const std::string ok = "# flip\nmealy-automaton v1\nname F\n\nalphabet 0 1\nstates s\n"
                           "transition s 0 s 1   # swap\ntransition s 1 s 0\n";
    const MealyMachine f = parse_document(ok);
    CHECK(f.out(0, 0) == 1);

    auto line_of_error = [](const std::string& text) -> std::string {
        try {
            parse_document(text);
        } catch (const InputError& e) {
            return e.what();
        }
        return "no error";
    };
    CHECK(line_of_error("mealy-automaton v2\n").find("line 1") != std::string::npos);
    CHECK(line_of_error("mealy-automaton v1\nalphabet 0 1\nstates s\ntransition s 0 s 1\n")
              .find("missing") != std::string::npos);
    CHECK(line_of_error("mealy-automaton v1\nalphabet 0 1\nstates s\ntransition s 0 s 1\ntransition s 0 s 0\n")
              .find("line 5") != std::string::npos);
    CHECK(line_of_error("mealy-automaton v1\nalphabet 0 1\nstates s\ntransition s 2 s 1\n").find("line 4")
          != std::string::npos);
    CHECK(line_of_error("mealy-automaton v1\nalphabet 0 1\nstates s\nbogus\n").find("line 4") != std::string::npos);
}

TEST_CASE("DOT output") {
    const std::string dot = to_dot(make_bellaterra(0));
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("\"c.0\" -> \"c.0\" [label=\"0|1,1|0\"]") != std::string::npos);
    CHECK(to_dot(aleshin_automaton()) == to_dot(aleshin_automaton()));
}

TEST_CASE("family specs and state word aliases") {
    const auto spec = cli::parse_family_spec("B:{0,2}");
    CHECK(spec.kind == "B");
    CHECK(spec.scope == Scope::of({0, 2}));
    CHECK(cli::parse_family_spec("aleshin").scope.is_classic());
    CHECK(cli::parse_family_spec("U:3").scope == Scope::single(3));
    CHECK_THROWS_AS(cli::build_family("Z", Scope::classic()), InputError);

    const MealyMachine a1 = make_aleshin(1);
    CHECK(cli::resolve_state_word(a1, "a b") == Word{0, 1});
    CHECK(cli::resolve_state_word(a1, "a.1 c") == Word{0, 2});
    const MealyMachine u12 = make_U(Scope::of({1, 2}));
    CHECK_THROWS_AS(cli::resolve_state_word(u12, "a"), InputError);
    CHECK_THROWS_AS(cli::resolve_state_word(a1, "z"), InputError);
}

TEST_CASE("family and transform commands") {
    auto r = run({"family", "aleshin", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("states a.1 b.1 c.1\n") != std::string::npos);
    CHECK(parse_document(r.out).num_states() == 3);

    r = run({"family", "bellaterra", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("transition c.0 0 c.0 1\n") != std::string::npos);

    r = run({"family", "aleshin", "0"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());

    r = run({"family", "aleshin", "--dot"});
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph") == 0);

    r = run({"transform", "dual", "--family", "aleshin"});
    CHECK(r.code == 0);
    CHECK(r.out.find("alphabet a b c\n") != std::string::npos);

    const std::string path = temp_file("b.txt", serialize_document(bellaterra_automaton()));
    r = run({"transform", "inverse", "--machine", path});
    CHECK(r.code == 0);
    const MealyMachine ib = parse_document(r.out);
    CHECK(ib.table().out == bellaterra_automaton().table().out);
    CHECK(run({"transform", "inverse", "--machine", "/nonexistent/file"}).code == 2);

    const MealyMachine k("K", Alphabet({"0", "1"}), Alphabet({"k"}), {0, 0}, {0, 0});
    CHECK(run({"transform", "inverse", "--machine", temp_file("k.txt", serialize_document(k))}).code == 2);
}

TEST_CASE("act command") {
    auto r = run({"act", "--family", "aleshin:1", "--xi", "a", "--word", "00"});
    CHECK(r.code == 0);
    CHECK(r.out == "10\n");
    CHECK(run({"act", "--xi", "", "--word", "0101"}).out == "0101\n");
    CHECK(run({"act", "--family", "bellaterra:1", "--xi", "a a", "--word", "01"}).out == "01\n");
    // Inverse symbols come from the signed machine.
    CHECK(run({"act", "--family", "aleshin", "--xi", "a a'", "--word", "0110"}).out == "0110\n");
    CHECK(run({"act", "--family", "aleshin", "--xi", "d", "--word", "0"}).code == 2);
    CHECK(run({"act", "--family", "aleshin", "--xi", "a", "--word", "2"}).code == 2);
}

TEST_CASE("check command") {
    auto r = run({"check", "--family", "aleshin:2", "bireversible"});
    CHECK(r.code == 0);
    CHECK(r.out.find("status PASS") != std::string::npos);

    const MealyMachine k("K", Alphabet({"0", "1"}), Alphabet({"k"}), {0, 0}, {0, 0});
    r = run({"check", "--machine", temp_file("k2.txt", serialize_document(k)), "invertible", "--format",
             "structured"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == false);
    CHECK_FALSE(j["witnesses"].empty());
}

TEST_CASE("verify command") {
    auto r = run({"verify", "freeness", "--max-len", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("status PASS") != std::string::npos);

    r = run({"verify", "orbits", "--N", "{1,2}", "--which", "marked", "--max-len", "2", "--format", "structured"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["suite"] == "orbits");
    CHECK(j["status"] == "PASS");

    CHECK(run({"verify", "transitivity", "--n", "2", "--max-level", "2"}).code == 0);
    CHECK(run({"verify", "freeness", "--max-len", "4", "--cap", "20"}).code == 3);
    CHECK(run({"verify", "bogus"}).code == 2);
    CHECK(run({"verify", "identities", "--N", "{0,1}"}).code == 2);
    CHECK(run({"verify", "orbits", "--N", "{1,2}", "--which", "pattern"}).code == 2);
    CHECK(run({}).code == 2);
}
