/*!
  \file json_io.hpp
  \brief JSON readers and writers for the file formats: codes, tables,
  registries and circuits.  Serialization is deterministic (sorted keys,
  canonical wire names) so fixture bytes are reproducible.
*/

#pragma once

#include "circuit.hpp"
#include "parse_tree.hpp"
#include "table.hpp"
#include "word.hpp"

#include <json.hpp>

#include <map>
#include <queue>

namespace nv
{

using json = nlohmann::json;

inline signature signature_from_json( json const& j )
{
  if ( !j.contains( "n" ) || !j.contains( "k" ) )
    throw error( "BadFile", "missing \"n\" or \"k\"" );
  signature sig{ j.at( "n" ).get<int>(), j.at( "k" ).get<int>() };
  check_signature( sig );
  return sig;
}

inline ntuple ntuple_from_json( signature sig, json const& j )
{
  if ( j.is_string() )
    return parse_ntuple( sig, j.get<std::string>() );
  if ( !j.is_array() )
    throw error( "BadFile", "a tuple is an array of coordinate strings" );
  std::vector<std::string> cs;
  for ( auto const& c : j )
    cs.push_back( c.get<std::string>() );
  return ntuple( sig, std::move( cs ) );
}

inline json ntuple_to_json( ntuple const& x )
{
  json j = json::array();
  for ( auto const& c : x.coords() )
    j.push_back( c );
  return j;
}

// --- code files --------------------------------------------------------

inline code_set code_from_json( json const& j )
{
  auto sig = signature_from_json( j );
  std::vector<ntuple> elems;
  for ( auto const& t : j.at( "tuples" ) )
    elems.push_back( ntuple_from_json( sig, t ) );
  return code_set( sig, std::move( elems ) );
}

inline json code_to_json( code_set const& P )
{
  json j;
  j["n"] = P.sig().n;
  j["k"] = P.sig().k;
  j["tuples"] = json::array();
  for ( auto const& e : P )
    j["tuples"].push_back( ntuple_to_json( e ) );
  return j;
}

// --- table files -------------------------------------------------------

inline table table_from_json( json const& j )
{
  auto sig = signature_from_json( j );
  table::pair_list ps;
  for ( auto const& pr : j.at( "pairs" ) )
  {
    if ( !pr.is_array() || pr.size() != 2 )
      throw error( "BadFile", "a table pair is [domain, image]" );
    ps.emplace_back( ntuple_from_json( sig, pr[0] ), ntuple_from_json( sig, pr[1] ) );
  }
  return table( sig, std::move( ps ) );
}

inline json table_to_json( table const& t )
{
  json j;
  j["n"] = t.sig().n;
  j["k"] = t.sig().k;
  j["pairs"] = json::array();
  for ( auto const& [d, i] : t.pairs() )
    j["pairs"].push_back( json::array( { ntuple_to_json( d ), ntuple_to_json( i ) } ) );
  return j;
}

// --- registries --------------------------------------------------------

inline generator_registry registry_from_json( json const& j )
{
  auto sig = signature_from_json( j );
  std::vector<std::pair<std::string, table>> named;
  for ( auto const& [name, entry] : j.at( "generators" ).items() )
  {
    table::pair_list ps;
    for ( auto const& pr : entry.at( "pairs" ) )
      ps.emplace_back( ntuple_from_json( sig, pr[0] ), ntuple_from_json( sig, pr[1] ) );
    named.emplace_back( name, table( sig, std::move( ps ) ) );
  }
  return generator_registry( sig, std::move( named ) );
}

inline json registry_to_json( generator_registry const& reg )
{
  json j;
  j["n"] = reg.sig().n;
  j["k"] = reg.sig().k;
  j["generators"] = json::object();
  for ( auto const& [name, t] : reg.named() )
  {
    json g;
    g["pairs"] = table_to_json( t )["pairs"];
    j["generators"][name] = g;
  }
  return j;
}

// --- parse trees -------------------------------------------------------

inline json parse_tree_to_json( parse_tree const& t )
{
  json j;
  j["n"] = t.sig.n;
  j["k"] = t.sig.k;
  j["leaves"] = code_to_json( t.leaves )["tuples"];
  j["splits"] = json::array();
  for ( auto const& [v, axis] : t.split_axis )
    j["splits"].push_back( json::object( { { "at", ntuple_to_json( v ) }, { "axis", axis } } ) );
  return j;
}

// --- circuits ----------------------------------------------------------

namespace detail
{

struct raw_gate
{
  std::string id;
  gate_type type;
  std::vector<std::string> inputs;
};

struct raw_ref
{
  int src; // -1 input, else raw gate index
  int port;
};

inline raw_ref parse_wire( std::string const& s, std::map<std::string, int> const& ids, int m )
{
  if ( s.size() >= 2 && s[0] == 'x' && std::isdigit( static_cast<unsigned char>( s[1] ) ) )
  {
    int i = std::stoi( s.substr( 1 ) );
    if ( i >= 1 && i <= m )
      return { -1, i - 1 };
  }
  std::string name = s;
  int port = 0;
  if ( auto dot = s.rfind( '.' ); dot != std::string::npos )
  {
    name = s.substr( 0, dot );
    port = std::stoi( s.substr( dot + 1 ) );
  }
  auto it = ids.find( name );
  if ( it == ids.end() )
    throw error( "BadFile", "wire '" + s + "' references nothing" );
  return { it->second, port };
}

} // namespace detail

/*! Reads a circuit; fan-in and fan-out beyond the gate arities are
    normalized through gate chains and FORK chains. */
inline circuit circuit_from_json( json const& j )
{
  int const m = j.at( "m" ).get<int>();
  int const n = j.at( "n" ).get<int>();

  std::vector<detail::raw_gate> raw;
  std::map<std::string, int> ids;
  for ( auto const& g : j.at( "gates" ) )
  {
    detail::raw_gate rg;
    rg.id = g.contains( "id" ) ? g.at( "id" ).get<std::string>() : ( "g" + std::to_string( raw.size() ) );
    rg.type = gate_type_from_string( g.at( "type" ).get<std::string>() );
    for ( auto const& w : g.at( "inputs" ) )
      rg.inputs.push_back( w.get<std::string>() );
    if ( ids.count( rg.id ) )
      throw error( "BadFile", "duplicate gate id '" + rg.id + "'" );
    ids[rg.id] = static_cast<int>( raw.size() );
    raw.push_back( std::move( rg ) );
  }

  // resolve wires; normalize multi-fan-in AND/OR through chains
  struct node
  {
    gate_type type;
    std::vector<detail::raw_ref> ins;
    std::string id;
  };
  std::vector<node> nodes;
  std::vector<int> raw_to_node( raw.size() );
  for ( std::size_t i = 0; i < raw.size(); ++i )
  {
    auto const& rg = raw[i];
    std::vector<detail::raw_ref> ins;
    for ( auto const& s : rg.inputs )
      ins.push_back( detail::parse_wire( s, ids, m ) );
    bool const chainable = rg.type == gate_type::and_gate || rg.type == gate_type::or_gate;
    if ( static_cast<int>( ins.size() ) != fan_in( rg.type ) && !( chainable && ins.size() > 2 ) )
      throw error( "BadFile", "gate '" + rg.id + "' has the wrong number of inputs" );
    if ( chainable && ins.size() > 2 )
    {
      // left chain: (((a ? b) ? c) ? d)
      int prev = -1;
      for ( std::size_t t = 1; t < ins.size(); ++t )
      {
        node nd{ rg.type, {}, t + 1 == ins.size() ? rg.id : rg.id + "#" + std::to_string( t ) };
        // chain nodes are not raw gates; encode their index as -1000-x
        nd.ins.push_back( t == 1 ? ins[0] : detail::raw_ref{ -1000 - prev, 0 } );
        nd.ins.push_back( ins[t] );
        prev = static_cast<int>( nodes.size() );
        nodes.push_back( std::move( nd ) );
      }
      raw_to_node[i] = prev;
    }
    else
    {
      raw_to_node[i] = static_cast<int>( nodes.size() );
      nodes.push_back( node{ rg.type, std::move( ins ), rg.id } );
    }
  }
  // remap references: raw index -> node index; -1000-x -> node x
  auto remap = [&]( detail::raw_ref r ) {
    if ( r.src <= -1000 )
      return detail::raw_ref{ -1000 - r.src, r.port };
    if ( r.src >= 0 )
      return detail::raw_ref{ raw_to_node[static_cast<std::size_t>( r.src )], r.port };
    return r;
  };
  for ( auto& nd : nodes )
    for ( auto& r : nd.ins )
      r = remap( r );

  std::vector<detail::raw_ref> outs;
  for ( auto const& w : j.at( "outputs" ) )
    outs.push_back( remap( detail::parse_wire( w.get<std::string>(), ids, m ) ) );

  // fan-out normalization: forks for every port with several consumers
  struct consumer
  {
    int node;   // -1: circuit output
    int slot;
  };
  std::map<std::pair<int, int>, std::vector<consumer>> uses; // (node|-1-input, port)
  auto key_of = [&]( detail::raw_ref const& r ) {
    return r.src < 0 ? std::make_pair( -1 - r.port, 0 ) : std::make_pair( r.src, r.port );
  };
  for ( std::size_t i = 0; i < nodes.size(); ++i )
    for ( std::size_t s = 0; s < nodes[i].ins.size(); ++s )
      uses[key_of( nodes[i].ins[s] )].push_back( { static_cast<int>( i ), static_cast<int>( s ) } );
  for ( std::size_t s = 0; s < outs.size(); ++s )
    uses[key_of( outs[s] )].push_back( { -1, static_cast<int>( s ) } );

  for ( auto const& [key, consumers] : uses )
  {
    if ( consumers.size() < 2 )
      continue;
    detail::raw_ref src = key.first < 0 ? detail::raw_ref{ -1, -1 - key.first } : detail::raw_ref{ key.first, key.second };
    // c consumers need c-1 forks chained on port 1
    std::vector<detail::raw_ref> leaves;
    detail::raw_ref tail = src;
    for ( std::size_t t = 0; t + 1 < consumers.size(); ++t )
    {
      nodes.push_back( node{ gate_type::fork, { tail }, {} } );
      int const f = static_cast<int>( nodes.size() ) - 1;
      leaves.push_back( { f, 0 } );
      tail = { f, 1 };
    }
    leaves.push_back( tail );
    for ( std::size_t t = 0; t < consumers.size(); ++t )
    {
      if ( consumers[t].node < 0 )
        outs[static_cast<std::size_t>( consumers[t].slot )] = leaves[t];
      else
        nodes[static_cast<std::size_t>( consumers[t].node )].ins[static_cast<std::size_t>( consumers[t].slot )] = leaves[t];
    }
  }

  // topological order (Kahn)
  std::vector<int> indeg( nodes.size(), 0 );
  std::vector<std::vector<int>> succ( nodes.size() );
  for ( std::size_t i = 0; i < nodes.size(); ++i )
  {
    for ( auto const& r : nodes[i].ins )
    {
      if ( r.src >= 0 )
      {
        succ[static_cast<std::size_t>( r.src )].push_back( static_cast<int>( i ) );
        ++indeg[i];
      }
    }
  }
  // smallest-index-first so an already ordered gate list keeps its order
  std::priority_queue<int, std::vector<int>, std::greater<int>> q;
  for ( std::size_t i = 0; i < nodes.size(); ++i )
    if ( indeg[i] == 0 )
      q.push( static_cast<int>( i ) );
  std::vector<int> order;
  while ( !q.empty() )
  {
    int const v = q.top();
    q.pop();
    order.push_back( v );
    for ( int s : succ[static_cast<std::size_t>( v )] )
      if ( --indeg[static_cast<std::size_t>( s )] == 0 )
        q.push( s );
  }
  if ( order.size() != nodes.size() )
    throw error( "BadCircuit", "the gate graph has a cycle" );
  std::vector<int> pos( nodes.size() );
  for ( std::size_t i = 0; i < order.size(); ++i )
    pos[static_cast<std::size_t>( order[i] )] = static_cast<int>( i );

  std::vector<gate> gates( nodes.size() );
  for ( std::size_t i = 0; i < nodes.size(); ++i )
  {
    gate g;
    g.type = nodes[i].type;
    g.id = nodes[i].id;
    for ( auto const& r : nodes[i].ins )
      g.inputs.push_back( r.src < 0 ? wire_ref::input( r.port )
                                    : wire_ref::gate_out( pos[static_cast<std::size_t>( r.src )], r.port ) );
    gates[static_cast<std::size_t>( pos[i] )] = std::move( g );
  }
  std::vector<wire_ref> outputs;
  for ( auto const& r : outs )
    outputs.push_back( r.src < 0 ? wire_ref::input( r.port )
                                 : wire_ref::gate_out( pos[static_cast<std::size_t>( r.src )], r.port ) );
  return circuit( m, n, std::move( gates ), std::move( outputs ) );
}

inline json circuit_to_json( circuit const& c )
{
  auto wire_name = []( wire_ref const& w ) {
    if ( w.from_input() )
      return "x" + std::to_string( w.port + 1 );
    std::string s = "g" + std::to_string( w.src );
    if ( w.port != 0 )
      s += "." + std::to_string( w.port );
    return s;
  };
  json j;
  j["m"] = c.inputs();
  j["n"] = c.outputs_count();
  j["gates"] = json::array();
  for ( std::size_t i = 0; i < c.gates().size(); ++i )
  {
    json g;
    g["id"] = "g" + std::to_string( i );
    g["type"] = to_string( c.gates()[i].type );
    g["inputs"] = json::array();
    for ( auto const& w : c.gates()[i].inputs )
      g["inputs"].push_back( wire_name( w ) );
    j["gates"].push_back( g );
  }
  j["outputs"] = json::array();
  for ( auto const& w : c.outputs() )
    j["outputs"].push_back( wire_name( w ) );
  return j;
}

} // namespace nv
