#include <doctest.h>

#include <nv/json_io.hpp>
#include <nv/reduction.hpp>

#include <random>

using namespace nv;

namespace
{

signature const sig12{ 1, 2 };

code_set random_prefix_code( int steps, std::mt19937_64& rng )
{
  code_set P( sig12, { ntuple::root( sig12 ) } );
  for ( int s = 0; s < steps; ++s )
    P = one_step_restriction( P, P.elements()[rng() % P.size()], 1 );
  return P;
}

table random_v_table( int steps, std::mt19937_64& rng )
{
  auto dom = random_prefix_code( steps, rng ).elements();
  auto img = random_prefix_code( steps, rng ).elements();
  std::shuffle( img.begin(), img.end(), rng );
  table::pair_list ps;
  for ( std::size_t i = 0; i < dom.size(); ++i )
    ps.emplace_back( dom[i], img[i] );
  return table( sig12, std::move( ps ) );
}

circuit gate1( gate_type t )
{
  int const fi = fan_in( t );
  std::vector<wire_ref> ins;
  for ( int i = 0; i < fi; ++i )
    ins.push_back( wire_ref::input( i ) );
  std::vector<wire_ref> outs;
  for ( int p = 0; p < fan_out( t ); ++p )
    outs.push_back( wire_ref::gate_out( 0, p ) );
  return circuit( fi, fan_out( t ), { gate{ t, ins, {} } }, outs );
}

} // namespace

TEST_CASE( "pFix membership oracle" )
{
  CHECK( in_pfix0( table::identity_on( uniform_code( sig12, 1 ) ) ) );
  CHECK( !in_pfix0( builtin_tables().phi_not ) );

  std::mt19937_64 rng( 107 );
  for ( int rep = 0; rep < 30; ++rep )
  {
    auto g = random_v_table( 1 + static_cast<int>( rng() % 4 ), rng );
    CHECK( in_pfix0( theta( g, fix_side::fix0 ) ) );
    CHECK( in_pfix1( theta( g, fix_side::fix1 ) ) );
    CHECK( in_pfix0( theta( g, fix_side::fix1 ) ) == max_extension_v( g ).is_identity() );
  }
}

TEST_CASE( "theta on phi_not" )
{
  auto h = theta( builtin_tables().phi_not, fix_side::fix1 );
  table expect( sig12, { { ntuple( sig12, { "1" } ), ntuple( sig12, { "1" } ) },
                         { ntuple( sig12, { "00" } ), ntuple( sig12, { "01" } ) },
                         { ntuple( sig12, { "01" } ), ntuple( sig12, { "00" } ) } } );
  CHECK( h == expect );
  CHECK( h.validate().ok );
  CHECK( end_equivalent( theta( table::identity_on( uniform_code( sig12, 1 ) ), fix_side::fix1 ),
                         table::identity_on( uniform_code( sig12, 1 ) ) ) );
}

TEST_CASE( "theta is a homomorphism" )
{
  std::mt19937_64 rng( 109 );
  for ( int rep = 0; rep < 25; ++rep )
  {
    auto g = random_v_table( 1 + static_cast<int>( rng() % 3 ), rng );
    auto h = random_v_table( 1 + static_cast<int>( rng() % 3 ), rng );
    for ( auto side : { fix_side::fix1, fix_side::fix0 } )
      CHECK( end_equivalent( theta( compose( g, h ), side ), compose( theta( g, side ), theta( h, side ) ) ) );
  }
}

TEST_CASE( "moved points of partial stabilizers are prefix-incomparable with their images" )
{
  std::mt19937_64 rng( 113 );
  int tested = 0;
  while ( tested < 25 )
  {
    // block-diagonal element: theta(g, fix0)-style on the 1-side, free g0 on the 0-side
    auto g0 = random_v_table( 1 + static_cast<int>( rng() % 3 ), rng );
    auto g1 = random_v_table( 1 + static_cast<int>( rng() % 3 ), rng );
    table::pair_list ps;
    for ( auto const& [d, i] : g0.pairs() )
      ps.emplace_back( ntuple( sig12, { "0" + d.coord( 0 ) } ), ntuple( sig12, { "0" + i.coord( 0 ) } ) );
    for ( auto const& [d, i] : g1.pairs() )
      ps.emplace_back( ntuple( sig12, { "1" + d.coord( 0 ) } ), ntuple( sig12, { "1" + i.coord( 0 ) } ) );
    table g( sig12, std::move( ps ) );
    if ( in_pfix0( g ) )
      continue;
    ++tested;
    bool found = false;
    for ( auto const& [d, i] : g.pairs() )
    {
      if ( d.coord( 0 )[0] == '0' && !prefix_comparable( d.coord( 0 ), i.coord( 0 ) ) )
        found = true;
    }
    CHECK( found );
  }
}

TEST_CASE( "the separator construction" )
{
  std::mt19937_64 rng( 127 );
  auto f = separator_f0( "00", "010" );
  CHECK( f.validate().ok );
  CHECK( !in_pfix0( f ) ); // it moves 0y0
  for ( int rep = 0; rep < 25; ++rep )
  {
    // random prefix-incomparable 0x, 0y
    auto code = random_prefix_code( 2 + static_cast<int>( rng() % 3 ), rng );
    std::vector<std::string> zero_side;
    for ( auto const& e : code )
      if ( !e.coord( 0 ).empty() && e.coord( 0 )[0] == '0' )
        zero_side.push_back( e.coord( 0 ) );
    if ( zero_side.size() < 2 )
      continue;
    auto x = zero_side[rng() % zero_side.size()];
    auto y = zero_side[rng() % zero_side.size()];
    if ( prefix_comparable( x, y ) )
      continue;
    auto f0 = separator_f0( x, y );
    CHECK( f0.validate().ok );
    // f0 fixes the 1-subtree
    for ( auto const& [d, i] : f0.pairs() )
      if ( d.coord( 0 )[0] == '1' )
        CHECK( d == i );
    // f0(x u) = x u and f0(y u) != y u for u = "0"
    CHECK( f0.apply( ntuple( sig12, { x + "0" } ) ) == ntuple( sig12, { x + "0" } ) );
    CHECK( !( f0.apply( ntuple( sig12, { y + "0" } ) ) == ntuple( sig12, { y + "0" } ) ) );
  }
}

TEST_CASE( "commutation test validates against the direct oracle" )
{
  auto reg = standard_registry_v();
  std::mt19937_64 rng( 131 );
  int inside = 0, outside = 0;
  while ( inside < 25 || outside < 25 )
  {
    table g = rng() % 2 == 0 ? theta( random_v_table( 1 + static_cast<int>( rng() % 3 ), rng ), fix_side::fix0 )
                             : random_v_table( 1 + static_cast<int>( rng() % 4 ), rng );
    bool const member = in_pfix0( g );
    ( member ? inside : outside )++;
    CHECK( commutes_with_pfix1_generators( g, reg ) == member );
  }
}

TEST_CASE( "commutation instances from words" )
{
  auto reg = standard_registry_v();
  auto u = parse_word( "a tau(2) phi_or" );
  auto out_same = commutation_instances( u, u, reg );
  CHECK( out_same.verdict );
  CHECK( out_same.arity == static_cast<int>( reg.named().size() ) );
  CHECK( out_same.instances.size() == reg.named().size() );

  // emitted instances decide the same way through the word path
  auto ext = commutation_registry( reg );
  for ( auto const& inst : out_same.instances )
    CHECK( is_identity_word( inst, ext, identity_mode::table ).is_identity );

  auto v = parse_word( "a tau(2) phi_and" );
  auto out_diff = commutation_instances( u, v, reg );
  CHECK( !out_diff.verdict );
  REQUIRE( out_diff.failing.has_value() );
  auto const& failing = out_diff.instances[*out_diff.failing];
  CHECK( !is_identity_word( failing, ext, identity_mode::table ).is_identity );
}

TEST_CASE( "fredkin networks compile to V words" )
{
  auto reg = fredkin_registry();
  auto c = gate1( gate_type::fredkin );
  auto w = compile_fredkin_network( c );
  auto t = eval_to_table( w, reg );
  CHECK( end_equivalent( t, fredkin_table() ) );

  // wire triple (2,4,1) on 4 wires, against direct evaluation
  circuit scattered( 4, 4,
                     { gate{ gate_type::fredkin,
                             { wire_ref::input( 1 ), wire_ref::input( 3 ), wire_ref::input( 0 ) }, {} } },
                     { wire_ref::gate_out( 0, 2 ), wire_ref::gate_out( 0, 0 ), wire_ref::input( 2 ),
                       wire_ref::gate_out( 0, 1 ) } );
  auto w2 = compile_fredkin_network( scattered );
  auto t2 = eval_to_table( w2, reg );
  for ( std::uint64_t v = 0; v < 16; ++v )
  {
    auto x = scattered.input_bits( v );
    auto y = scattered.evaluate( x );
    std::string in, out;
    for ( bool b : x )
      in.push_back( b ? '1' : '0' );
    for ( bool b : y )
      out.push_back( b ? '1' : '0' );
    CHECK( t2.apply( ntuple( sig12, { in } ) ) == ntuple( sig12, { out } ) );
  }
}

TEST_CASE( "equivalence modes agree on small circuits" )
{
  // not o not == id
  circuit notnot( 1, 1,
                  { gate{ gate_type::not_gate, { wire_ref::input( 0 ) }, {} },
                    gate{ gate_type::not_gate, { wire_ref::gate_out( 0 ) }, {} } },
                  { wire_ref::gate_out( 1 ) } );
  circuit ident( 1, 1, { gate{ gate_type::id, { wire_ref::input( 0 ) }, {} } }, { wire_ref::gate_out( 0 ) } );

  CHECK( circuit_equivalence( notnot, ident, equivalence_mode::truthtable ).equivalent );
  CHECK( circuit_equivalence( notnot, ident, equivalence_mode::group ).equivalent );
  CHECK( circuit_equivalence( notnot, notnot, equivalence_mode::group ).equivalent );

  circuit neg( 1, 1, { gate{ gate_type::not_gate, { wire_ref::input( 0 ) }, {} } }, { wire_ref::gate_out( 0 ) } );
  CHECK( !circuit_equivalence( neg, ident, equivalence_mode::truthtable ).equivalent );
  CHECK( !circuit_equivalence( neg, ident, equivalence_mode::group ).equivalent );

  CHECK_THROWS_AS( circuit_equivalence( neg, gate1( gate_type::and_gate ), equivalence_mode::truthtable ),
                   error const& );
}

TEST_CASE( "jordan mode matches the permutation oracle" )
{
  std::mt19937_64 rng( 137 );
  for ( int rep = 0; rep < 10; ++rep )
  {
    int const wires = 3 + static_cast<int>( rng() % 3 );
    auto random_network = [&]( int gates_count ) {
      std::vector<gate> gs;
      std::vector<wire_ref> free;
      for ( int i = 0; i < wires; ++i )
        free.push_back( wire_ref::input( i ) );
      for ( int g = 0; g < gates_count; ++g )
      {
        std::vector<wire_ref> ins;
        for ( int t = 0; t < 3; ++t )
        {
          std::size_t const idx = rng() % free.size();
          ins.push_back( free[idx] );
          free.erase( free.begin() + static_cast<std::ptrdiff_t>( idx ) );
        }
        gs.push_back( gate{ gate_type::fredkin, ins, {} } );
        for ( int p = 0; p < 3; ++p )
          free.push_back( wire_ref::gate_out( static_cast<int>( gs.size() ) - 1, p ) );
      }
      return circuit( wires, wires, gs, free );
    };
    auto c1 = random_network( 1 + static_cast<int>( rng() % 3 ) );
    auto c2 = random_network( 1 + static_cast<int>( rng() % 3 ) );
    bool const oracle = c1.truth_table() == c2.truth_table();
    CHECK( circuit_equivalence( c1, c2, equivalence_mode::jordan ).equivalent == oracle );
    CHECK( circuit_equivalence( c1, c1, equivalence_mode::jordan ).equivalent );
  }
}
