#include <catch2/catch_amalgamated.hpp>

#include "treelink/quaternary.hpp"
#include "treelink/render.hpp"

using namespace treelink;

TEST_CASE("renders are byte-identical across calls") {
    GroupElement w0 = generator_w(0);
    REQUIRE(render_tree_svg(w0.diagram()) == render_tree_svg(w0.diagram()));
    REQUIRE(render_strip_svg(w0.diagram()) == render_strip_svg(w0.diagram()));
    REQUIRE(render_link_svg(w0) == render_link_svg(w0));
}

TEST_CASE("strip render of a non-member carries the failure banner") {
    std::string svg = render_strip_svg(generator_x(0).diagram());
    REQUIRE(svg.find("not 3-strip-colorable") != std::string::npos);
    REQUIRE(svg.find("<polygon") == std::string::npos);
}

TEST_CASE("strip render of a member fills its regions") {
    std::string svg = render_strip_svg(generator_w(0).diagram());
    REQUIRE(svg.rfind("<svg", 0) == 0);
    REQUIRE(svg.find("<polygon") != std::string::npos);
    REQUIRE(svg.find("not 3-strip-colorable") == std::string::npos);

    std::string id_svg = render_strip_svg(GroupElement::identity().diagram());
    REQUIRE(id_svg.find("<polygon") != std::string::npos);
}

TEST_CASE("link render of the identity is a circle") {
    std::string svg = render_link_svg(GroupElement::identity());
    REQUIRE(svg.find("<circle") != std::string::npos);
}

TEST_CASE("link render of a member is tinted by the induced coloring") {
    std::string svg = render_link_svg(generator_w(0));
    REQUIRE(svg.find("#1d4ed8") != std::string::npos);  // blue region arcs
    REQUIRE(svg.find("#15803d") != std::string::npos);  // the green unbounded arc
    std::string plain = render_link_svg(generator_x(0));
    REQUIRE(plain.find("#1d4ed8") == std::string::npos);  // no coloring to show
    REQUIRE(plain.find("<polyline") != std::string::npos);
}
