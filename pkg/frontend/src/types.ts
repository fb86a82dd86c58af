// Mirrors of the service JSON models.

export interface ArrowModel {
  name: string;
  source: string;
  target: string;
  degree: number;
}

export interface TermModel {
  coefficient: string;
  start: string;
  arrows: string[];
}

export interface RelationModel {
  name: string;
  terms: TermModel[];
  text: string;
}

export type Classification = "strict_source" | "strict_sink" | "neither";

export interface StateModel {
  vertices: string[];
  arrows: ArrowModel[];
  potential: TermModel[];
  potential_text: string;
  cut: string[];
  cut_valid: boolean;
  has_cut: boolean;
  classifications: Record<string, Classification>;
  relations: RelationModel[];
  declared_degree: number | null;
}

export interface SessionModel {
  id: string;
  state: StateModel;
  history_length: number;
}

export interface StepResponse {
  id: string;
  state: StateModel;
  history_length: number;
  applied: { vertex: string; side: string; nonstrict: boolean };
  cut_preserved: boolean;
  warning: string | null;
}
