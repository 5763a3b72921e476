/*!
  \file reduction.hpp
  \brief From circuit equivalence to word-problem instances: partial
  fixators of the 0- and 1-subtrees, the theta embeddings of V into them,
  the commutation test, and the three equivalence-decision modes.
*/

#pragma once

#include "compiler.hpp"

#include <set>

namespace nv
{

namespace detail
{

inline bool in_pfix_digit( table const& t, char digit )
{
  if ( t.sig().n != 1 )
    throw error( "WrongDimension", "partial fixators are defined over V" );
  code_set split( t.sig(), { ntuple( t.sig(), { "0" } ), ntuple( t.sig(), { "1" } ) } );
  auto joint = elementwise_join( t.domain_code().with_flags( tristate::yes, tristate::yes ),
                                 split.with_flags( tristate::yes, tristate::yes ) );
  for ( auto const& j : joint )
  {
    if ( j.coord( 0 ).front() == digit && !( *t.apply( j ) == j ) )
      return false;
  }
  return true;
}

} // namespace detail

/*! Direct membership oracle for pFix_V(0): refine the domain code so
    every element starts with 0 or 1, then check that the 0-side is
    pointwise fixed. */
inline bool in_pfix0( table const& t )
{
  return detail::in_pfix_digit( t, '0' );
}

/*! Membership oracle for pFix_V(1), the mirror subgroup. */
inline bool in_pfix1( table const& t )
{
  return detail::in_pfix_digit( t, '1' );
}

enum class fix_side
{
  fix1, // image fixes the 1-subtree: pairs {(1,1)} + {(0x, 0y)}
  fix0  // image fixes the 0-subtree: pairs {(0,0)} + {(1x, 1y)}
};

/*! The isomorphism of V onto pFix_V(1) (or pFix_V(0)): prepend the fixed
    digit's complement to every pair and adjoin the fixed subtree. */
inline table theta( table const& g, fix_side side )
{
  if ( g.sig().n != 1 )
    throw error( "WrongDimension", "theta embeds V" );
  char const moved = side == fix_side::fix1 ? '0' : '1';
  char const fixed = side == fix_side::fix1 ? '1' : '0';
  table::pair_list ps;
  ps.emplace_back( ntuple( g.sig(), { std::string( 1, fixed ) } ),
                   ntuple( g.sig(), { std::string( 1, fixed ) } ) );
  for ( auto const& [d, i] : g.pairs() )
    ps.emplace_back( ntuple( g.sig(), { moved + d.coord( 0 ) } ),
                     ntuple( g.sig(), { moved + i.coord( 0 ) } ) );
  return table( g.sig(), std::move( ps ) );
}

/*! Fredkin gate as an element of V: 0 x2 x3 fixed, 1 x2 x3 -> 1 x3 x2. */
inline table fredkin_table()
{
  signature sig{ 1, 2 };
  table::pair_list ps;
  for ( int c = 0; c < 2; ++c )
  {
    for ( int a = 0; a < 2; ++a )
    {
      for ( int b = 0; b < 2; ++b )
      {
        std::string d{ static_cast<char>( '0' + c ), static_cast<char>( '0' + a ), static_cast<char>( '0' + b ) };
        std::string i = c ? std::string{ '1', static_cast<char>( '0' + b ), static_cast<char>( '0' + a ) } : d;
        ps.emplace_back( ntuple( sig, { d } ), ntuple( sig, { i } ) );
      }
    }
  }
  return table( sig, std::move( ps ) );
}

/*! Minimal completion of a set of pairwise prefix-incomparable strings
    to a finite maximal prefix code. */
inline std::vector<std::string> complete_prefix_code( std::vector<std::string> elems, int k = 2 )
{
  std::vector<std::string> out;
  std::function<void( std::string const& )> rec = [&]( std::string const& node ) {
    bool is_elem = std::find( elems.begin(), elems.end(), node ) != elems.end();
    if ( is_elem )
    {
      out.push_back( node );
      return;
    }
    bool below = false;
    for ( auto const& e : elems )
      below = below || is_prefix( node, e );
    if ( !below )
    {
      out.push_back( node );
      return;
    }
    for ( int a = 0; a < k; ++a )
      rec( node + static_cast<char>( '0' + a ) );
  };
  rec( "" );
  return out;
}

/*! The separator of the f0-construction: for prefix-incomparable 0x, 0y,
    an element of pFix_V(1) fixing 0x u while moving 0y u (u = "0"): the
    table swaps 0y0 <-> 0y1 and fixes a completing code. */
inline table separator_f0( std::string const& zero_x, std::string const& zero_y )
{
  signature sig{ 1, 2 };
  if ( prefix_comparable( zero_x, zero_y ) )
    throw error( "BadIndices", "the separator needs prefix-incomparable strings" );
  if ( zero_x.empty() || zero_y.empty() || zero_x[0] != '0' || zero_y[0] != '0' )
    throw error( "BadIndices", "the separator lives below the 0-subtree" );
  auto code = complete_prefix_code( { zero_x, zero_y + "0", zero_y + "1", "1" } );
  table::pair_list ps;
  for ( auto const& e : code )
  {
    std::string img = e;
    if ( e == zero_y + "0" )
      img = zero_y + "1";
    else if ( e == zero_y + "1" )
      img = zero_y + "0";
    ps.emplace_back( ntuple( sig, { e } ), ntuple( sig, { img } ) );
  }
  return table( sig, std::move( ps ) );
}

/*! Classical four-generator registry for V (two tree generators, a
    3-cycle and a transposition of caret leaves) together with the gate
    simulators the compiler emits. */
inline generator_registry standard_registry_v()
{
  signature sig{ 1, 2 };
  auto t = []( signature s, std::vector<std::pair<char const*, char const*>> rows ) {
    table::pair_list ps;
    for ( auto const& [d, i] : rows )
      ps.emplace_back( ntuple( s, { d } ), ntuple( s, { i } ) );
    return table( s, std::move( ps ) );
  };
  auto b = builtin_tables();
  return generator_registry(
      sig,
      { { "a", t( sig, { { "00", "0" }, { "01", "10" }, { "1", "11" } } ) },
        { "b", t( sig, { { "0", "0" }, { "100", "10" }, { "101", "110" }, { "11", "111" } } ) },
        { "c", t( sig, { { "0", "10" }, { "10", "11" }, { "11", "0" } } ) },
        { "pi0", t( sig, { { "0", "10" }, { "10", "0" }, { "11", "11" } } ) },
        { "phi_not", b.phi_not },
        { "phi_or", b.phi_or },
        { "phi_and", b.phi_and },
        { "phi_0f", b.phi_zero_fork },
        { "phi_f", b.phi_fork } } );
}

/*! Registry for Fredkin-network words. */
inline generator_registry fredkin_registry()
{
  return generator_registry( signature{ 1, 2 }, { { "fredkin", fredkin_table() } } );
}

/*! The registry extended by the theta(fix1)-images of its named
    generators, which the emitted commutator words reference. */
inline generator_registry commutation_registry( generator_registry const& reg )
{
  auto named = reg.named();
  for ( auto const& [name, t] : reg.named() )
  {
    if ( reg.has_named( "theta_" + name ) )
      throw error( "UnknownGenerator", "generator name 'theta_" + name + "' is reserved for the reduction" );
    named.emplace_back( "theta_" + name, theta( t, fix_side::fix1 ) );
  }
  return generator_registry( reg.sig(), std::move( named ) );
}

struct reduction_output
{
  std::vector<word> instances;       // one commutator word per generator
  std::vector<std::string> names;    // the generator behind each instance
  int arity = 0;
  bool verdict = false;
  std::optional<std::size_t> failing; // first non-identity instance
};

/*! Word evaluation in V with each partial product replaced by its
    maximum extension: the same group element, kept in canonical minimal
    form so intermediate tables do not inflate. */
inline table eval_to_table_reduced_v( word const& w, generator_registry const& reg )
{
  if ( reg.sig().n != 1 )
    throw error( "WrongDimension", "canonical reduction exists only in V" );
  std::optional<table> acc;
  for ( auto const& tok : w )
  {
    if ( acc && tok.type == word_token::kind::tau )
      acc = detail::compose_acc_tau( *acc, tok.index );
    else
    {
      table t = token_table( tok, reg );
      acc = acc ? compose( std::move( *acc ), t ) : std::move( t );
    }
    acc = max_extension_v( *acc );
  }
  if ( !acc )
    return table::identity_on( uniform_code( reg.sig(), 0 ) );
  return std::move( *acc );
}

/*! The conjunctive reduction: with g = u^{-1} v, emits the commutator
    words [g, theta(gamma)] over the extended registry and decides their
    conjunction.  The verdict evaluates g once and commutes the resulting
    table with each theta-image; this is the same composition regrouped,
    since end-equivalence is a congruence. */
inline reduction_output commutation_instances( word const& u, word const& v,
                                               generator_registry const& reg )
{
  if ( reg.sig().n != 1 )
    throw error( "WrongDimension", "the commutation test runs in V" );
  word const g = inverse( u ) + v;

  reduction_output out;
  out.arity = static_cast<int>( reg.named().size() );
  for ( auto const& [name, t] : reg.named() )
  {
    word h{ named_token( "theta_" + name ) };
    out.instances.push_back( inverse( g ) + inverse( h ) + g + h );
    out.names.push_back( name );
  }

  table const G = eval_to_table_reduced_v( g, reg );
  out.verdict = true;
  for ( std::size_t i = 0; i < out.names.size(); ++i )
  {
    table const& H = theta( reg.named_table( out.names[i] ), fix_side::fix1 );
    if ( !end_equivalent( compose( G, H ), compose( H, G ) ) )
    {
      out.verdict = false;
      out.failing = i;
      break;
    }
  }
  return out;
}

/*! Direct table-level commutation test against the theta(fix1)-images of
    the registry's named generators. */
inline bool commutes_with_pfix1_generators( table const& g, generator_registry const& reg )
{
  for ( auto const& [name, t] : reg.named() )
  {
    table const H = theta( t, fix_side::fix1 );
    if ( !end_equivalent( compose( g, H ), compose( H, g ) ) )
      return false;
  }
  return true;
}

/*! Word over {fredkin} and tau simulating a Fredkin network exactly (no
    0-padding: the network function is already a permutation, hence an
    element of V).  Gates at arbitrary wire triples are conjugated into
    position by adjacent-transposition words. */
inline word compile_fredkin_network( circuit const& c )
{
  if ( !c.fredkin_only() )
    throw error( "BadCircuit", "jordan mode accepts Fredkin-only networks" );
  if ( c.inputs() != c.outputs_count() )
    throw error( "ArityMismatch", "Fredkin networks preserve width" );

  int const m = c.inputs();
  std::vector<std::vector<int>> gate_pos( c.gates().size() ); // positions of each gate's outputs
  auto pos_of = [&]( wire_ref const& w ) {
    return w.from_input() ? w.port + 1 : gate_pos[static_cast<std::size_t>( w.src )][static_cast<std::size_t>( w.port )];
  };

  word network; // display order; first gate rightmost
  for ( std::size_t gi = 0; gi < c.gates().size(); ++gi )
  {
    auto const& g = c.gates()[gi];
    std::vector<int> want{ pos_of( g.inputs[0] ), pos_of( g.inputs[1] ), pos_of( g.inputs[2] ) };

    // route the three wires to positions 1, 2, 3
    std::vector<int> at( static_cast<std::size_t>( m ) + 1 );
    std::iota( at.begin(), at.end(), 0 ); // at[p] = wire currently at position p
    std::vector<word> applied;
    auto find_pos = [&]( int wire ) {
      for ( int p = 1; p <= m; ++p )
        if ( at[static_cast<std::size_t>( p )] == wire )
          return p;
      return -1;
    };
    for ( int t = 1; t <= 3; ++t )
    {
      int const cur = find_pos( want[static_cast<std::size_t>( t - 1 )] );
      if ( cur != t )
      {
        applied.push_back( expand_tau_ij( std::min( t, cur ), std::max( t, cur ) ) );
        std::swap( at[static_cast<std::size_t>( t )], at[static_cast<std::size_t>( cur )] );
      }
    }
    word route;
    for ( auto it = applied.rbegin(); it != applied.rend(); ++it )
      route = route + *it;

    network = inverse( route ) + word{ named_token( "fredkin" ) } + route + network;
    gate_pos[gi] = want; // ports come back to the consumed positions
  }

  // final crossing: declared output j sits at position pos_of(outputs[j])
  std::vector<int> targets;
  for ( auto const& w : c.outputs() )
    targets.push_back( pos_of( w ) - 1 );
  return detail::position_permutation_word( targets, 1 ) + network;
}

enum class equivalence_mode
{
  truthtable,
  group,
  jordan
};

struct equivalence_result
{
  bool equivalent = false;
  std::optional<reduction_output> reduction; // group mode
};

/*! Decides f_{C1} = f_{C2}.  truthtable is the brute-force oracle; group
    compiles both circuits and runs the commutation test; jordan compiles
    Fredkin networks directly and tests w1^{-1} w2 = 1. */
inline equivalence_result circuit_equivalence( circuit const& c1, circuit const& c2,
                                               equivalence_mode mode,
                                               generator_registry const* reg = nullptr,
                                               int max_inputs = 20 )
{
  if ( c1.inputs() != c2.inputs() || c1.outputs_count() != c2.outputs_count() )
    throw error( "ArityMismatch", "the circuits must have equal arities" );

  equivalence_result r;
  switch ( mode )
  {
  case equivalence_mode::truthtable:
  {
    if ( c1.inputs() > max_inputs )
      throw error( "TooLarge", "truth tables over 2^" + std::to_string( c1.inputs() ) + " inputs" );
    r.equivalent = c1.truth_table() == c2.truth_table();
    return r;
  }
  case equivalence_mode::group:
  {
    static generator_registry const default_reg = standard_registry_v();
    generator_registry const& base = reg ? *reg : default_reg;
    auto w1 = compile_circuit( c1 ).final;
    auto w2 = compile_circuit( c2 ).final;
    r.reduction = commutation_instances( w1, w2, base );
    r.equivalent = r.reduction->verdict;
    return r;
  }
  default:
  {
    static generator_registry const fred = fredkin_registry();
    auto w1 = compile_fredkin_network( c1 );
    auto w2 = compile_fredkin_network( c2 );
    auto res = is_identity_word( inverse( w1 ) + w2, fred, identity_mode::table );
    r.equivalent = res.is_identity;
    return r;
  }
  }
}

} // namespace nv
