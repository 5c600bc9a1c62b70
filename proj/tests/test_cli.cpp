#include "support.hpp"

#include "vcdr/cli.hpp"

#include <doctest.h>

#include <sstream>

using namespace vt;

namespace {

struct Run {
	int status;
	std::string out, err;
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int st = cli_main(args, out, err);
	return {st, out.str(), err.str()};
}

} // namespace

TEST_CASE("single computations")
{
	CHECK(run({"ope", "Q", "G", "--dim", "2"}).out == "2 (z-w)^-3 + J (z-w)^-2 + L (z-w)^-1\n");
	CHECK(run({"ope", "J", "J", "--dim", "3"}).out == "3 (z-w)^-2\n");
	CHECK(run({"ope", "b1", "b1", "--dim", "1"}).out == "0\n");
	CHECK(run({"--algebra", "exotic", "ope", "LA", "s(2)"}).out == "-2*s(2) (z-w)^-1\n");
	// central charge 2n - 2n = 0
	CHECK(run({"ope", "L", "L", "--dim", "1"}).out == "2*L (z-w)^-2 + del(L) (z-w)^-1\n");
	CHECK(run({"--format", "lines", "ope", "J", "J", "--dim", "2"}).out == "POLE 2 2\n");
	CHECK(run({"--algebra", "exotic", "prod", "-k", "0", "LA", "s(2)"}).out == "-2*s(2)\n");
	CHECK(run({"tdualize", "1"}).out == "Ahat\n");
	CHECK(run({"tdualize", "A"}).out == "-1\n");
	CHECK(run({"sigma", "1"}).out == "A\n");
	CHECK(run({"d", "iA", "--plain"}).out == "-dx*dy + LA\n");
	CHECK(run({"dhat", "--component", "4", "GammaA"}).out == "iAhat\n");
}

TEST_CASE("exit statuses")
{
	CHECK(run({"roundtrip"}).status == 0);
	CHECK(run({"check", "d2", "--samples", "30"}).status == 0);
	CHECK(run({"check", "homotopy", "--scene", "std2d"}).status == 2);
	CHECK(run({"check", "homotopy", "--dim", "2", "--samples", "20"}).status == 0);
	CHECK(run({"normalize", "x +"}).status == 2);
	CHECK(run({"normalize", "nosuch"}).status == 2);
	CHECK(run({"bogus"}).status == 2);
	CHECK(run({"--scene", "/nonexistent", "roundtrip"}).status == 2);
	CHECK(run({"--weight-cap", "1", "normalize", "L*L"}).status == 3);
	CHECK(run({"--help"}).status == 0);
	CHECK(run({"--mutate", "exotic:0", "check", "opes"}).status == 1);
}

TEST_CASE("lines reports are byte identical")
{
	auto a = run({"check", "opes", "--format", "lines", "--seed", "3"});
	auto b = run({"check", "opes", "--format", "lines", "--seed", "3"});
	CHECK(a.status == 0);
	CHECK(a.out == b.out);
	CHECK(a.out.rfind("CHECK ", 0) == 0);
}
