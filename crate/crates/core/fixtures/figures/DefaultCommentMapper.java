package org.eclipse.jdt.core.dom;

class DefaultCommentMapper {
    Comment[] comments;

    public Comment[] getLeadingComments(ASTNode node) {
        if (this.leadingPtr >= 0) {
            int[] range = null;
            for (int i=0; range==null && i<=this.leadingPtr; i++) {
                if (this.leadingNodes[i] == node) range = this.leadingIndexes[i];
            }
            if (range != null) {
                int length = range[1]-range[0]+1;
                Comment[] leadComments = new Comment[length];
                System.arraycopy(this.comments, range[0], leadComments, 0, length);
                return leadComments;
            }
        }
        return null;
    }

    public int getExtendedStartPosition(ASTNode node) {
        if (this.leadingPtr >= 0) {
            int[] range = null;
            for (int i=0; i<=this.leadingPtr; i++) {
                if (this.leadingNodes[i] == node)
                range = this.leadingIndexes[i];
            }
            if (range != null) {
                return
                this.comments[range[0]].getStartPosition() ;
            }
        }
        return node.getStartPosition();
    }

    public Comment[] getTrailingComments(ASTNode node) {
        if (this.trailingPtr >= 0) {
            int[] range = null;
            for (int i=0; range==null && i<=this.trailingPtr; i++) {
                if (this.trailingNodes[i] == node) range = this.trailingIndexes[i];
            }
            if (range != null) {
                int length = range[1]-range[0]+1;
                Comment[] trailComments = new Comment[length];
                System.arraycopy(this.comments, range[0], trailComments, 0, length);
                return trailComments;
            }
        }
        return null;
    }

    public int getExtendedEnd(ASTNode node) {
        int end = node.getStartPosition() + node.getLength();
        if (this.trailingPtr >= 0) {
            int[] range = null;
            for (int i=0; range==null && i<=this.trailingPtr; i++) {
                if (this.trailingNodes[i] == node) range = this.trailingIndexes[i];
            }
            if (range != null) {
                Comment lastComment = this.comments[range[1]];
                end = lastComment.getStartPosition() + lastComment.getLength();
            }
        }
        return end-1;
    }

    public int getExtendedLength(ASTNode node) {
        return getExtendedEnd(node) - getExtendedStartPosition(node) + 1;
    }
}
