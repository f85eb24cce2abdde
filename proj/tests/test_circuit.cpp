#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <qromopt/circuit.hpp>
#include <qromopt/cost.hpp>
#include <qromopt/database.hpp>
#include <qromopt/esop.hpp>

using namespace qromopt;

namespace
{

database example_database()
{
  return { 2u, 4u, { 0b1110u, 0b1001u, 0b0100u, 0b1111u } };
}

circuit pipeline_circuit( database const& db )
{
  return emit_circuit( minimize_database( db ) );
}

} // namespace

TEST_CASE( "emitted gates carry one polarized control per specified literal" )
{
  std::vector<cover> covers( 3, cover{ 3u, {} } );
  covers[2].cubes = { cube_from_string( "01-" ) };

  auto const circ = emit_circuit( covers );
  REQUIRE( circ.gates.size() == 1 );
  CHECK( circ.gates[0].target == 2 );
  CHECK( circ.gates[0].controls ==
         std::vector<control>{ { 0u, polarity::negative }, { 1u, polarity::positive } } );

  std::vector<cover> unconditional( 1, cover{ 2u, { cube_from_string( "--" ) } } );
  auto const x_only = emit_circuit( unconditional );
  REQUIRE( x_only.gates.size() == 1 );
  CHECK( x_only.gates[0].controls.empty() );
}

TEST_CASE( "gate histogram of the emitted circuit equals the cover histogram" )
{
  auto const covers = minimize_database( example_database() );
  auto const circ = emit_circuit( covers );
  auto const report = make_cost_report( covers, 2 );

  CHECK( circ.gates.size() == static_cast<std::size_t>( report.cube_count ) );
  CHECK( gate_histogram( circ ) == report.gate_histogram );
}

TEST_CASE( "simulation writes the stored word at every address" )
{
  circuit const empty{ 2u, 3u, {} };
  for ( uint64_t a = 0; a < 4; ++a )
    CHECK( simulate( empty, a ) == 0 );

  auto const db = example_database();
  auto const circ = pipeline_circuit( db );
  for ( uint64_t a = 0; a < db.num_entries(); ++a )
    CHECK( simulate( circ, a ) == db.entries[a] );

  CHECK_THROWS_AS( simulate( circ, 4 ), std::invalid_argument );
}

TEST_CASE( "simulation is invariant under gate reordering" )
{
  auto const db = random_instance( 3, 4, 15 );
  auto const circ = pipeline_circuit( db );
  circuit reversed = circ;
  std::reverse( reversed.gates.begin(), reversed.gates.end() );
  for ( uint64_t a = 0; a < db.num_entries(); ++a )
    CHECK( simulate( circ, a ) == simulate( reversed, a ) );
}

TEST_CASE( "a reordered database is reproduced at its permuted addresses" )
{
  auto const db = example_database();
  permutation const perm{ { 2, 1, 0, 3 } };
  auto const reordered = reorder( db, perm );
  auto const circ = pipeline_circuit( reordered );

  CHECK( verify( circ, reordered ).ok );
  for ( uint64_t a = 0; a < db.num_entries(); ++a )
    CHECK( simulate( circ, perm.mapping[a] ) == db.entries[a] );
}

TEST_CASE( "verification passes on random instances and catches a deleted gate" )
{
  for ( int trial = 0; trial < 25; ++trial )
  {
    auto const db = random_instance( 2 + trial % 3, 1 + trial % 6, 300 + trial );
    auto const circ = pipeline_circuit( db );
    CHECK( verify( circ, db ).ok );
  }

  auto const db = example_database();
  auto mutated = pipeline_circuit( db );
  REQUIRE( !mutated.gates.empty() );
  mutated.gates.pop_back();

  auto const result = verify( mutated, db );
  REQUIRE( !result.ok );
  /* the diagnostic names the smallest mismatching address */
  uint64_t first_bad = 0;
  while ( simulate( mutated, first_bad ) == db.entries[first_bad] )
    ++first_bad;
  CHECK( result.address == first_bad );
  CHECK( result.expected == db.entries[first_bad] );
  CHECK( result.actual == simulate( mutated, first_bad ) );

  CHECK( verify( circuit{ 2u, 3u, {} }, database{ 2u, 3u, { 0, 0, 0, 0 } } ).ok );
  CHECK_THROWS_AS( verify( circuit{ 3u, 3u, {} }, database{ 2u, 3u, { 0, 0, 0, 0 } } ),
                   std::invalid_argument );
}

TEST_CASE( "QASM output is stable and lowers negative controls to X conjugation" )
{
  circuit const empty{ 2u, 1u, {} };
  CHECK( to_qasm( empty ) == "OPENQASM 3.0;\n"
                             "include \"stdgates.inc\";\n"
                             "// addr[0] carries the most significant address bit;\n"
                             "// data[0] carries the most significant data bit.\n"
                             "qubit[2] addr;\n"
                             "qubit[1] data;\n" );

  std::vector<cover> single_cx( 1, cover{ 3u, { cube_from_string( "1--" ) } } );
  auto const cx_text = to_qasm( emit_circuit( single_cx ) );
  CHECK( cx_text.find( "cx addr[0], data[0];\n" ) != std::string::npos );

  std::vector<cover> mixed( 1, cover{ 3u, { cube_from_string( "01-" ) } } );
  auto const mixed_text = to_qasm( emit_circuit( mixed ) );
  CHECK( mixed_text.find( "x addr[0];\n"
                          "ctrl(2) @ x addr[0], addr[1], data[0];\n"
                          "x addr[0];\n" ) != std::string::npos );

  auto const circ = pipeline_circuit( example_database() );
  CHECK( to_qasm( circ ) == to_qasm( circ ) );
}

TEST_CASE( "circuit JSON uses the [qubit, polarity] control encoding" )
{
  gate const g{ { { 0u, polarity::negative }, { 1u, polarity::positive } }, 2u };
  CHECK( nlohmann::json( g ).dump() == R"({"controls":[[0,"neg"],[1,"pos"]],"target":2})" );
  CHECK( nlohmann::json( g ).get<gate>() == g );

  auto const circ = pipeline_circuit( example_database() );
  nlohmann::json const j = circ;
  CHECK( j["n"] == 2 );
  CHECK( j["d"] == 4 );
  CHECK( j.get<circuit>() == circ );

  nlohmann::json bad = nlohmann::json::parse( R"({"controls":[[0,"down"]],"target":0})" );
  CHECK_THROWS( bad.get<gate>() );
}
